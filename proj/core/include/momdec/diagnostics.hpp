#pragma once

#include <vector>

#include "momdec/moment_sequence.hpp"

namespace momdec {

/// Per-coordinate partial sums sum_{k=1..K} L_z(x_i^{2k})^(-1/2k).
/// A nonpositive even moment contributes +infinity. This is a divergence
/// diagnostic only; no boolean verdict is possible from finitely many terms.
struct CarlemanDiagnostic {
  // partial_sums[i][k-1] is the k-term partial sum for coordinate i.
  std::vector<std::vector<double>> partial_sums;
};

CarlemanDiagnostic carleman_diagnostic(const MomentSequence& z, int terms);

/// Checks M_d(nu) <= gamma * M_d(lambda) at one level d via the minimum
/// eigenvalue of gamma*M_d(lambda) - M_d(nu).
struct DensityBoundCheck {
  bool holds;
  double min_eig;
};

DensityBoundCheck density_bound_check(const MomentSequence& nu,
                                      const MomentSequence& lambda, double gamma,
                                      int d, double eps_psd = 1e-8);

}  // namespace momdec
