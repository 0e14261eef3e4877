#include "momdec/moment_sequence.hpp"

#include "momdec/errors.hpp"

namespace momdec {

MomentSequence::MomentSequence(int n, int max_degree, Eigen::VectorXd values,
                               std::string label)
    : indexer_(n, max_degree), values_(std::move(values)), label_(std::move(label)) {
  if (static_cast<std::size_t>(values_.size()) != indexer_.size()) {
    throw DimensionError("MomentSequence: need one value per multi-index up to max degree");
  }
}

MomentSequence MomentSequence::zero(int n, int max_degree, std::string label) {
  return MomentSequence(
      n, max_degree,
      Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis_size(n, max_degree))),
      std::move(label));
}

double MomentSequence::at(const MultiIndex& alpha) const {
  return values_[static_cast<Eigen::Index>(indexer_.index_of(alpha))];
}

MomentSequence MomentSequence::truncated(int degree) const {
  if (degree > max_degree()) {
    throw DegreeError("MomentSequence: cannot truncate to a higher degree");
  }
  const auto head = static_cast<Eigen::Index>(basis_size(dimension(), degree));
  return MomentSequence(dimension(), degree, values_.head(head), label_);
}

MomentSequence MomentSequence::normalized() const {
  if (!(values_[0] > 0.0)) {
    throw Error("MomentSequence: normalization requires z_0 > 0");
  }
  return MomentSequence(dimension(), max_degree(), values_ / values_[0], label_);
}

MomentSequence MomentSequence::scaled(double factor) const {
  return MomentSequence(dimension(), max_degree(), values_ * factor, label_);
}

namespace {
void check_compatible(const MomentSequence& a, const MomentSequence& b) {
  if (a.dimension() != b.dimension() || a.max_degree() != b.max_degree()) {
    throw DimensionError("MomentSequence: dimension/degree mismatch in arithmetic");
  }
}
}  // namespace

MomentSequence operator+(const MomentSequence& a, const MomentSequence& b) {
  check_compatible(a, b);
  return MomentSequence(a.dimension(), a.max_degree(), a.values_ + b.values_, a.label_);
}

MomentSequence operator-(const MomentSequence& a, const MomentSequence& b) {
  check_compatible(a, b);
  return MomentSequence(a.dimension(), a.max_degree(), a.values_ - b.values_, a.label_);
}

}  // namespace momdec
