#pragma once

#include <Eigen/Core>
#include <vector>

#include "momdec/moment_sequence.hpp"
#include "momdec/multi_index.hpp"

namespace momdec {

/// M_d(z): symmetric s(d) x s(d) matrix with entry (alpha, beta) = z_{alpha+beta}.
struct MomentMatrix {
  int d;
  BasisIndexer indexer;
  Eigen::MatrixXd entries;
};

/// Throws DegreeError if z.max_degree() < 2d.
MomentMatrix build_moment_matrix(const MomentSequence& z, int d);

/// The 0/1 matrices B_alpha with v_d(x) v_d(x)^T = sum_alpha B_alpha x^alpha,
/// indexed by N^n_{2d} in graded-lex order. Hence M_d(z) = sum_alpha z_alpha B_alpha.
std::vector<Eigen::MatrixXd> basis_expansion_matrices(int n, int d);

}  // namespace momdec
