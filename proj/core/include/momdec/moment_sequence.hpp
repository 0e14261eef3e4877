#pragma once

#include <Eigen/Core>
#include <string>

#include "momdec/multi_index.hpp"

namespace momdec {

/// Dense truncated moment sequence (z_alpha), |alpha| <= max_degree, stored in
/// graded-lex order. Immutable after construction.
class MomentSequence {
 public:
  MomentSequence(int n, int max_degree, Eigen::VectorXd values, std::string label = "");

  static MomentSequence zero(int n, int max_degree, std::string label = "");

  int dimension() const { return indexer_.dimension(); }
  int max_degree() const { return indexer_.max_degree(); }
  const std::string& label() const { return label_; }
  const BasisIndexer& indexer() const { return indexer_; }
  const Eigen::VectorXd& values() const { return values_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

  double operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }
  /// Value at alpha; throws DegreeError if |alpha| > max_degree.
  double at(const MultiIndex& alpha) const;
  /// Convenience for one dimension.
  double at(int k) const { return at(MultiIndex({k})); }

  double mass() const { return values_[0]; }  // z_0

  MomentSequence truncated(int degree) const;
  /// Sequence divided by z_0; requires z_0 > 0.
  MomentSequence normalized() const;
  MomentSequence scaled(double factor) const;

  friend MomentSequence operator+(const MomentSequence& a, const MomentSequence& b);
  friend MomentSequence operator-(const MomentSequence& a, const MomentSequence& b);

 private:
  BasisIndexer indexer_;
  Eigen::VectorXd values_;
  std::string label_;
};

}  // namespace momdec
