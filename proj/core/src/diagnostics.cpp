#include "momdec/diagnostics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "momdec/errors.hpp"
#include "momdec/moment_matrix.hpp"

namespace momdec {

CarlemanDiagnostic carleman_diagnostic(const MomentSequence& z, int terms) {
  if (z.max_degree() < 2 * terms) {
    throw DegreeError("carleman_diagnostic: sequence must cover degree 2K");
  }
  const int n = z.dimension();
  CarlemanDiagnostic out;
  out.partial_sums.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    auto& sums = out.partial_sums[static_cast<std::size_t>(i)];
    sums.reserve(static_cast<std::size_t>(terms));
    for (int k = 1; k <= terms; ++k) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 2 * k;
      const double moment = z.at(MultiIndex(std::move(e)));
      if (moment <= 0.0) {
        sum = std::numeric_limits<double>::infinity();
      } else {
        sum += std::pow(moment, -1.0 / (2.0 * k));
      }
      sums.push_back(sum);
    }
  }
  return out;
}

DensityBoundCheck density_bound_check(const MomentSequence& nu,
                                      const MomentSequence& lambda, double gamma,
                                      int d, double eps_psd) {
  if (nu.dimension() != lambda.dimension()) {
    throw DimensionError("density_bound_check: dimension mismatch");
  }
  const Eigen::MatrixXd diff = gamma * build_moment_matrix(lambda, d).entries -
                               build_moment_matrix(nu, d).entries;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(diff, Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  return {min_eig >= -eps_psd, min_eig};
}

}  // namespace momdec
