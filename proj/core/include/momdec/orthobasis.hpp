#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

#include "momdec/conic.hpp"
#include "momdec/dd.hpp"
#include "momdec/moment_sequence.hpp"

namespace momdec {

namespace detail {

/// Small dense matrix of double-doubles, row-major.
class DdMatrix {
 public:
  DdMatrix() = default;
  DdMatrix(Eigen::Index rows, Eigen::Index cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  dd& at(Eigen::Index r, Eigen::Index c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const dd& at(Eigen::Index r, Eigen::Index c) const {
    return a_[static_cast<std::size_t>(r * cols_ + c)];
  }

  static DdMatrix from_double(const Eigen::MatrixXd& m);
  Eigen::MatrixXd to_double() const;

 private:
  Eigen::Index rows_ = 0, cols_ = 0;
  std::vector<dd> a_;
};

/// Lower Cholesky factor; returns false if a pivot is not strictly positive
/// or falls below pivot_floor_sq.
bool dd_cholesky_lower(const DdMatrix& m, DdMatrix& L, double pivot_floor_sq);

/// Inverse of a lower-triangular matrix.
DdMatrix dd_lower_inverse(const DdMatrix& L);

/// L * B * L^T for double B, computed in dd.
DdMatrix dd_congruence(const DdMatrix& L, const Eigen::MatrixXd& b);

/// max |(L M L^T - I)_{ij}| in dd.
double dd_orth_residual(const DdMatrix& L, const DdMatrix& m);

}  // namespace detail

/// Basis of polynomials orthonormal with respect to lambda up to a degree.
/// Row k of `coeffs` holds the monomial coefficients of the k-th basis
/// polynomial (graded-lex order); the matrix is lower triangular with a
/// positive diagonal and satisfies L * M_d(lambda) * L^T = I.
///
/// `coeffs` is a double-precision view; the transform keeps the exact
/// double-double factor internally because the congruence loses meaning in
/// plain doubles once M_d(lambda) gets Hankel-ill-conditioned.
struct OrthonormalBasis {
  int dimension = 0;
  int degree = 0;
  Eigen::MatrixXd coeffs;
  std::string source;
  double orth_residual = 0.0;  // max |L M L^T - I|, computed in dd

  std::shared_ptr<const detail::DdMatrix> exact;  // dd view of coeffs
};

/// Orthonormalizes the monomial basis w.r.t. lambda via a dd Cholesky of
/// M_d(lambda). Throws NotPositiveDefiniteError (naming the offending
/// eigenvalue) when lambda has atomic or low-dimensional support; the
/// positivity test is on the Cholesky pivots: pivot^2 > eps_pd * scale.
OrthonormalBasis orthonormal_basis(const MomentSequence& lambda, int d,
                                   double eps_pd = 1e-12);

/// Congruence-transforms every block matrix B -> L B L^T. The feasible set in
/// the decision variables is unchanged; with the basis built from lambda, the
/// lambda-block constant becomes gamma * I.
ConicProgram transform_program(const ConicProgram& prog, const OrthonormalBasis& basis);

struct ConditionReport {
  std::vector<double> before;  // 2-norm condition number per block constant
  std::vector<double> after;
};

ConditionReport condition_report(const ConicProgram& prog, const ConicProgram& transformed);

/// Assembly data for posing the decomposition SDP directly in moments against
/// the lambda-orthonormal basis (decision variables yhat_gamma = L_y(L_gamma)).
/// Requires lambda moments up to degree 4d. All constructions run in dd.
class ConditionedAssembly {
 public:
  static ConditionedAssembly build(const MomentSequence& lambda, int d);

  int dimension() const { return n_; }
  int order() const { return d_; }

  /// Expansion matrices C_gamma with M-hat(yhat) = sum_gamma yhat_gamma C_gamma,
  /// gamma in N^n_{2d}; the lambda moment matrix in this basis is the identity.
  const std::vector<Eigen::MatrixXd>& expansion() const { return expansion_; }

  /// L_d M_d(z) L_d^T for a sequence z of degree >= 2d.
  Eigen::MatrixXd congruence(const MomentSequence& z) const;

  /// Monomial moments y (degree 2d) from orthonormal moments yhat: y = R yhat.
  Eigen::VectorXd monomial_moments(const Eigen::VectorXd& yhat) const;

  /// Coefficients of a linear functional t.y rewritten over yhat: R^T t.
  Eigen::VectorXd functional(const Eigen::VectorXd& monomial_coeffs) const;

  /// Degree-d orthonormal basis (for reporting and the route back to
  /// monomial Gram matrices).
  const OrthonormalBasis& basis() const { return basis_d_; }

 private:
  int n_ = 0;
  int d_ = 0;
  detail::DdMatrix chol_2d_;  // R: lower Cholesky factor of M_2d(lambda)
  detail::DdMatrix inv_chol_d_;  // L_d = (leading block of R)^{-1}
  std::vector<Eigen::MatrixXd> expansion_;
  OrthonormalBasis basis_d_;
};

}  // namespace momdec
