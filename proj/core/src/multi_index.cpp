#include "momdec/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "momdec/errors.hpp"

namespace momdec {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw DimensionError("MultiIndex: dimension must be >= 1");
  for (int e : exponents_) {
    if (e < 0) throw Error("MultiIndex: exponents must be nonnegative");
  }
  total_degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dimension() != other.dimension()) {
    throw DimensionError("MultiIndex: dimension mismatch in addition");
  }
  std::vector<int> sum(exponents_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = exponents_[i] + other.exponents_[i];
  return MultiIndex(std::move(sum));
}

bool MultiIndex::graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  // Within a degree, larger leading exponents come first: (1,0) before (0,1).
  return std::lexicographical_compare(b.exponents_.begin(), b.exponents_.end(),
                                      a.exponents_.begin(), a.exponents_.end());
}

std::size_t basis_size(int n, int d) {
  // binomial(n + d, n) computed without overflow at the sizes in play
  std::size_t result = 1;
  for (int i = 1; i <= n; ++i) {
    result = result * static_cast<std::size_t>(d + i) / static_cast<std::size_t>(i);
  }
  return result;
}

namespace {

void enumerate_degree(int n, int degree, std::vector<int>& current,
                      std::vector<MultiIndex>& out) {
  const int pos = static_cast<int>(current.size());
  if (pos == n - 1) {
    current.push_back(degree);
    out.emplace_back(current);
    current.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current.push_back(e);
    enumerate_degree(n, degree - e, current, out);
    current.pop_back();
  }
}

}  // namespace

BasisIndexer::BasisIndexer(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw DimensionError("BasisIndexer: dimension must be >= 1");
  if (d < 0) throw DegreeError("BasisIndexer: degree must be >= 0");
  indices_.reserve(basis_size(n, d));
  std::vector<int> current;
  for (int degree = 0; degree <= d; ++degree) enumerate_degree(n, degree, current, indices_);
}

std::optional<std::size_t> BasisIndexer::find(const MultiIndex& alpha) const {
  if (alpha.dimension() != n_ || alpha.total_degree() > d_) return std::nullopt;
  auto it = std::lower_bound(indices_.begin(), indices_.end(), alpha,
                             MultiIndex::graded_lex_less);
  if (it == indices_.end() || *it != alpha) return std::nullopt;
  return static_cast<std::size_t>(it - indices_.begin());
}

std::size_t BasisIndexer::index_of(const MultiIndex& alpha) const {
  if (alpha.dimension() != n_) throw DimensionError("BasisIndexer: dimension mismatch");
  auto pos = find(alpha);
  if (!pos) throw DegreeError("BasisIndexer: multi-index exceeds max degree");
  return *pos;
}

BasisIndexer enumerate_basis(int n, int d) { return BasisIndexer(n, d); }

}  // namespace momdec
