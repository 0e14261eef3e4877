#include "momdec/moment_matrix.hpp"

#include "momdec/errors.hpp"

namespace momdec {

MomentMatrix build_moment_matrix(const MomentSequence& z, int d) {
  if (z.max_degree() < 2 * d) {
    throw DegreeError("build_moment_matrix: sequence must cover degree 2d");
  }
  BasisIndexer rows(z.dimension(), d);
  const auto s = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(s, s);
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = i; j < s; ++j) {
      const double value = z.at(rows[static_cast<std::size_t>(i)] +
                                rows[static_cast<std::size_t>(j)]);
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return MomentMatrix{d, std::move(rows), std::move(m)};
}

std::vector<Eigen::MatrixXd> basis_expansion_matrices(int n, int d) {
  BasisIndexer rows(n, d);
  BasisIndexer full(n, 2 * d);
  const auto s = static_cast<Eigen::Index>(rows.size());
  std::vector<Eigen::MatrixXd> out(full.size(), Eigen::MatrixXd::Zero(s, s));
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = 0; j < s; ++j) {
      const std::size_t a = full.index_of(rows[static_cast<std::size_t>(i)] +
                                          rows[static_cast<std::size_t>(j)]);
      out[a](i, j) = 1.0;
    }
  }
  return out;
}

}  // namespace momdec
