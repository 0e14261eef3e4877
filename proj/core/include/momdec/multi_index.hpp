#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace momdec {

/// Exponent vector alpha in N^n, the index of a monomial x^alpha.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> exponents);

  int dimension() const { return static_cast<int>(exponents_.size()); }
  int total_degree() const { return total_degree_; }
  int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exponents_; }

  MultiIndex operator+(const MultiIndex& other) const;
  bool operator==(const MultiIndex& other) const { return exponents_ == other.exponents_; }
  bool operator!=(const MultiIndex& other) const { return !(*this == other); }

  /// Graded ordering: by total degree, ties broken lexicographically
  /// (x1 before x2, so (1,0) precedes (0,1)).
  static bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> exponents_;
  int total_degree_;
};

std::size_t basis_size(int n, int d);  // binomial(n + d, n)

/// Bijection between N^n_d and {0, ..., s(d)-1} in graded lexicographic order.
class BasisIndexer {
 public:
  BasisIndexer(int n, int d);

  int dimension() const { return n_; }
  int max_degree() const { return d_; }
  std::size_t size() const { return indices_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return indices_[i]; }

  /// Position of alpha, or nullopt if |alpha| > d or dimensions differ.
  std::optional<std::size_t> find(const MultiIndex& alpha) const;
  /// Like find() but throws DegreeError / DimensionError.
  std::size_t index_of(const MultiIndex& alpha) const;

  const std::vector<MultiIndex>& indices() const { return indices_; }

 private:
  int n_;
  int d_;
  std::vector<MultiIndex> indices_;
};

BasisIndexer enumerate_basis(int n, int d);

}  // namespace momdec
