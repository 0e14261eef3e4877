#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace momdec {

/// One LMI block: G - sum_i x_i A[i] >= 0 (PSD order).
struct ConicBlock {
  Eigen::MatrixXd G;
  std::vector<Eigen::MatrixXd> A;  // one symmetric matrix per variable
};

/// max c.x  s.t.  G_j - sum_i x_i A_ij >= 0 for every block j.
struct ConicProgram {
  int num_vars = 0;
  Eigen::VectorXd objective;
  std::vector<ConicBlock> blocks;
  std::vector<std::string> labels;  // per-variable provenance, may be empty

  /// Throws on size mismatches or asymmetry beyond sym_tol.
  void validate(double sym_tol = 1e-12) const;
};

enum class SolveStatus { kOptimal, kMaxIters, kNumericalFailure };

const char* to_string(SolveStatus status);

struct IterationStat {
  double mu;
  double primal_obj;
  double dual_obj;
  double primal_res;
  double dual_res;
  double step_primal;
  double step_dual;
  double sigma;
};

struct ConicSolution {
  Eigen::VectorXd x;
  std::vector<Eigen::MatrixXd> Z;  // dual PSD multiplier per block
  SolveStatus status = SolveStatus::kNumericalFailure;
  double primal_res = 0.0;  // relative norm of G - A(x) - S
  double dual_res = 0.0;    // relative norm of c - A*(Z)
  double gap = 0.0;         // relative |primal_obj - dual_obj|
  int iterations = 0;
  std::vector<IterationStat> history;

  double primal_obj = 0.0;
  double dual_obj = 0.0;
};

struct SolverSettings {
  double eps_feas = 1e-8;
  double eps_gap = 1e-9;
  int max_iters = 200;
  double step_fraction = 0.99;
  double init_scale = 1.0;
  double static_reg = 1e-10;  // added to the Schur complement diagonal
};

/// Residuals recomputed from scratch, independent of solver internals.
struct KktReport {
  double primal_cone_violation;  // max_j max(0, -lambda_min(G_j - A(x)))
  double dual_res;               // max_i |c_i - sum_j <A_ij, Z_j>|
  double dual_cone_violation;    // max_j max(0, -lambda_min(Z_j))
  double complementarity;        // sum_j <G_j - A(x), Z_j>
  double primal_obj;
  double dual_obj;
  double rel_gap;                // |pobj - dobj| / (1 + |pobj| + |dobj|)
};

KktReport kkt_report(const ConicProgram& prog, const ConicSolution& sol);

/// Returns the program with variable `index` pinned to `value` (folded into
/// the constant terms) and removed from the decision vector.
ConicProgram fix_variable(const ConicProgram& prog, int index, double value);

/// Self-describing JSON dump (block sizes, lower-triangle row-major entries)
/// for cross-checks against external solvers.
std::string to_debug_json(const ConicProgram& prog);

}  // namespace momdec
