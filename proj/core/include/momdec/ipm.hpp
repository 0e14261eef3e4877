#pragma once

#include "momdec/conic.hpp"

namespace momdec {

/// Primal-dual Nesterov-Todd predictor-corrector path following with
/// infeasible start (x = 0, S = Z = init_scale * I). Never throws on
/// numerical trouble: failures come back as a status carrying the last
/// iterate.
ConicSolution solve(const ConicProgram& prog, const SolverSettings& settings = {});

}  // namespace momdec
