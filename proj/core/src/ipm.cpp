#include "momdec/ipm.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace momdec {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Symmetric-matrix vectorization with <P,Q> = svec(P).svec(Q).
Eigen::VectorXd svec(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  Eigen::VectorXd v(n * (n + 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    v[k++] = m(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) v[k++] = kSqrt2 * m(r, c);
  }
  return v;
}

Eigen::MatrixXd unsvec(const Eigen::VectorXd& v, Eigen::Index n) {
  Eigen::MatrixXd m(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    m(c, c) = v[k++];
    for (Eigen::Index r = c + 1; r < n; ++r) {
      const double value = v[k++] / kSqrt2;
      m(r, c) = value;
      m(c, r) = value;
    }
  }
  return m;
}

struct BlockWork {
  Eigen::Index n = 0;
  double scale = 1.0;
  Eigen::MatrixXd G;                // scaled constant term
  std::vector<Eigen::MatrixXd> A;   // scaled coefficient matrices
  Eigen::MatrixXd SA;               // svec(A_i) stacked as columns

  Eigen::MatrixXd S, Z;

  // Per-iteration scaling state.
  Eigen::MatrixXd Ls, Lz;      // Cholesky factors of S and Z
  Eigen::MatrixXd Gw, Gwi;     // W = Gw Gw^T, Gwi = Gw^{-1}
  Eigen::MatrixXd Winv;
  Eigen::VectorXd D;           // scaled point (diagonal)

  Eigen::MatrixXd Rp;          // G - A(x) - S
  Eigen::MatrixXd dS_aff, dZ_aff, dS, dZ;
};

Eigen::MatrixXd apply_A(const BlockWork& b, const Eigen::VectorXd& x) {
  return unsvec(b.SA * x, b.n);
}

// Largest t with M + t*dM >= 0, via the factor L of M = L L^T.
double max_step(const Eigen::MatrixXd& L, const Eigen::MatrixXd& dM) {
  const Eigen::MatrixXd inner = L.triangularView<Eigen::Lower>().solve(
      L.triangularView<Eigen::Lower>().solve(dM).transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(inner, Eigen::EigenvaluesOnly);
  const double lmin = eig.eigenvalues().minCoeff();
  if (lmin >= 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

bool cholesky(const Eigen::MatrixXd& m, Eigen::MatrixXd& L) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) return false;
  L = llt.matrixL();
  return true;
}

}  // namespace

ConicSolution solve(const ConicProgram& prog, const SolverSettings& settings) {
  prog.validate();
  const int m = prog.num_vars;
  const Eigen::VectorXd& c = prog.objective;

  std::vector<BlockWork> blocks(prog.blocks.size());
  double total_dim = 0.0;
  for (std::size_t j = 0; j < prog.blocks.size(); ++j) {
    auto& b = blocks[j];
    b.n = prog.blocks[j].G.rows();
    b.scale = std::max(1.0, prog.blocks[j].G.norm());
    b.G = prog.blocks[j].G / b.scale;
    b.A.reserve(prog.blocks[j].A.size());
    b.SA.resize(b.n * (b.n + 1) / 2, m);
    for (int i = 0; i < m; ++i) {
      b.A.push_back(prog.blocks[j].A[static_cast<std::size_t>(i)] / b.scale);
      b.SA.col(i) = svec(b.A.back());
    }
    b.S = settings.init_scale * Eigen::MatrixXd::Identity(b.n, b.n);
    b.Z = b.S;
    total_dim += static_cast<double>(b.n);
  }

  ConicSolution sol;
  sol.x = Eigen::VectorXd::Zero(m);
  auto finish = [&](SolveStatus status) {
    sol.status = status;
    sol.Z.clear();
    for (const auto& b : blocks) sol.Z.push_back(b.Z / b.scale);
    sol.iterations = static_cast<int>(sol.history.size());
    return sol;
  };

  Eigen::MatrixXd schur(m, m);
  Eigen::VectorXd rd(m), rhs(m), dx(m);
  int consecutive_stalls = 0;

  for (int iter = 0; iter < settings.max_iters; ++iter) {
    // Residuals and merit quantities.
    double mu = 0.0;
    double pobj = c.dot(sol.x);
    double dobj = 0.0;
    double prim_res = 0.0;
    rd = c;
    for (auto& b : blocks) {
      b.Rp = b.G - apply_A(b, sol.x) - b.S;
      prim_res = std::max(prim_res, b.Rp.norm() / (1.0 + b.G.norm()));
      mu += b.S.cwiseProduct(b.Z).sum();
      dobj += b.G.cwiseProduct(b.Z).sum();
      rd.noalias() -= b.SA.transpose() * svec(b.Z);
    }
    mu /= total_dim;
    const double dual_res = rd.norm() / (1.0 + c.norm());
    const double rel_gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));

    sol.primal_res = prim_res;
    sol.dual_res = dual_res;
    sol.gap = rel_gap;
    sol.primal_obj = pobj;
    sol.dual_obj = dobj;

    if (prim_res <= settings.eps_feas && dual_res <= settings.eps_feas &&
        rel_gap <= settings.eps_gap) {
      return finish(SolveStatus::kOptimal);
    }

    // Nesterov-Todd scaling per block.
    bool scaling_ok = true;
    for (auto& b : blocks) {
      if (!cholesky(b.S, b.Ls) || !cholesky(b.Z, b.Lz)) {
        scaling_ok = false;
        break;
      }
      Eigen::BDCSVD<Eigen::MatrixXd> svd(b.Lz.transpose() * b.Ls,
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
      b.D = svd.singularValues();
      if (b.D.minCoeff() <= 0.0) {
        scaling_ok = false;
        break;
      }
      const Eigen::ArrayXd dinv_sqrt = b.D.array().sqrt().inverse();
      b.Gw = b.Ls * svd.matrixV() * dinv_sqrt.matrix().asDiagonal();
      b.Gwi = dinv_sqrt.matrix().asDiagonal() * svd.matrixU().transpose() *
              b.Lz.transpose();
      b.Winv = b.Gwi.transpose() * b.Gwi;
    }
    if (!scaling_ok) return finish(SolveStatus::kNumericalFailure);

    // Schur complement M_ik = sum_j <A_ij, Winv A_kj Winv>.
    schur.setZero();
    for (auto& b : blocks) {
      Eigen::MatrixXd ST(b.SA.rows(), m);
      for (int i = 0; i < m; ++i) {
        ST.col(i) = svec(b.Winv * b.A[static_cast<std::size_t>(i)] * b.Winv);
      }
      schur.noalias() += b.SA.transpose() * ST;
    }
    schur = 0.5 * (schur + schur.transpose());
    const double reg = settings.static_reg * (1.0 + schur.diagonal().maxCoeff());
    Eigen::MatrixXd schur_reg = schur + reg * Eigen::MatrixXd::Identity(m, m);
    Eigen::LLT<Eigen::MatrixXd> llt(schur_reg);
    Eigen::LDLT<Eigen::MatrixXd> ldlt;
    const bool use_llt = llt.info() == Eigen::Success;
    if (!use_llt) {
      ldlt.compute(schur_reg);
      if (ldlt.info() != Eigen::Success) return finish(SolveStatus::kNumericalFailure);
    }
    auto solve_schur = [&](const Eigen::VectorXd& b_vec) {
      Eigen::VectorXd s = use_llt ? llt.solve(b_vec) : ldlt.solve(b_vec);
      for (int round = 0; round < 2; ++round) {
        Eigen::VectorXd r = b_vec - schur * s;
        s += use_llt ? llt.solve(r) : ldlt.solve(r);
      }
      return s;
    };

    // Direction for a given scaled complementarity target Rv (per block).
    auto compute_direction = [&](const std::vector<Eigen::MatrixXd>& Rv, bool affine) {
      rhs = rd;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        auto& b = blocks[j];
        rhs.noalias() += b.SA.transpose() * svec(b.Winv * b.Rp * b.Winv);
        rhs.noalias() -= b.SA.transpose() * svec(b.Gwi.transpose() * Rv[j] * b.Gwi);
      }
      dx = solve_schur(rhs);
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        auto& b = blocks[j];
        Eigen::MatrixXd adx = apply_A(b, dx);
        Eigen::MatrixXd& ds = affine ? b.dS_aff : b.dS;
        Eigen::MatrixXd& dz = affine ? b.dZ_aff : b.dZ;
        ds = b.Rp - adx;
        dz = b.Gwi.transpose() * Rv[j] * b.Gwi - b.Winv * ds * b.Winv;
        dz = 0.5 * (dz + dz.transpose());
      }
      return dx;
    };

    auto step_lengths = [&](bool affine) {
      double ap = 1.0, ad = 1.0;
      for (auto& b : blocks) {
        const auto& ds = affine ? b.dS_aff : b.dS;
        const auto& dz = affine ? b.dZ_aff : b.dZ;
        ap = std::min(ap, settings.step_fraction * max_step(b.Ls, ds));
        ad = std::min(ad, settings.step_fraction * max_step(b.Lz, dz));
      }
      return std::pair{ap, ad};
    };

    // Predictor.
    std::vector<Eigen::MatrixXd> Rv(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      Rv[j] = (-blocks[j].D).asDiagonal();
    }
    Eigen::VectorXd dx_aff = compute_direction(Rv, /*affine=*/true);
    auto [ap_aff, ad_aff] = step_lengths(/*affine=*/true);

    double mu_aff = 0.0;
    for (auto& b : blocks) {
      mu_aff += (b.S + ap_aff * b.dS_aff).cwiseProduct(b.Z + ad_aff * b.dZ_aff).sum();
    }
    mu_aff = std::max(mu_aff / total_dim, 0.0);
    double sigma = std::pow(mu_aff / mu, 3);
    sigma = std::clamp(sigma, 1e-10, 1.0);

    // Corrector with Mehrotra second-order term.
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      auto& b = blocks[j];
      const Eigen::MatrixXd dSt = b.Gwi * b.dS_aff * b.Gwi.transpose();
      const Eigen::MatrixXd dZt = b.Gw.transpose() * b.dZ_aff * b.Gw;
      Eigen::MatrixXd rc = -0.5 * (dSt * dZt + dZt * dSt);
      rc.diagonal().array() += sigma * mu;
      rc.diagonal().array() -= b.D.array().square();
      for (Eigen::Index r = 0; r < b.n; ++r) {
        for (Eigen::Index col = 0; col < b.n; ++col) {
          rc(r, col) *= 2.0 / (b.D[r] + b.D[col]);
        }
      }
      Rv[j] = 0.5 * (rc + rc.transpose());
    }
    dx = compute_direction(Rv, /*affine=*/false);
    auto [ap, ad] = step_lengths(/*affine=*/false);
    ap = std::min(ap, 1.0);
    ad = std::min(ad, 1.0);

    sol.x += ap * dx;
    for (auto& b : blocks) {
      b.S += ap * b.dS;
      b.Z += ad * b.dZ;
    }
    sol.history.push_back({mu, pobj, dobj, prim_res, dual_res, ap, ad, sigma});

    if (ap < 1e-7 && ad < 1e-7) {
      if (++consecutive_stalls >= 3) return finish(SolveStatus::kNumericalFailure);
    } else {
      consecutive_stalls = 0;
    }
  }
  return finish(SolveStatus::kMaxIters);
}

}  // namespace momdec
