#include "momdec/conic.hpp"

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "momdec/errors.hpp"

namespace momdec {

void ConicProgram::validate(double sym_tol) const {
  if (num_vars < 1) throw DimensionError("ConicProgram: needs at least one variable");
  if (objective.size() != num_vars) {
    throw DimensionError("ConicProgram: objective size mismatch");
  }
  if (blocks.empty()) throw DimensionError("ConicProgram: needs at least one block");
  if (!labels.empty() && static_cast<int>(labels.size()) != num_vars) {
    throw DimensionError("ConicProgram: label count mismatch");
  }
  for (const auto& block : blocks) {
    const auto size = block.G.rows();
    if (block.G.cols() != size) throw DimensionError("ConicProgram: G not square");
    if (static_cast<int>(block.A.size()) != num_vars) {
      throw DimensionError("ConicProgram: A-list length must equal num_vars");
    }
    auto check_sym = [&](const Eigen::MatrixXd& m) {
      if (m.rows() != size || m.cols() != size) {
        throw DimensionError("ConicProgram: block matrices must share the block size");
      }
      if ((m - m.transpose()).cwiseAbs().maxCoeff() > sym_tol) {
        throw Error("ConicProgram: block matrix not symmetric");
      }
    };
    check_sym(block.G);
    for (const auto& a : block.A) check_sym(a);
  }
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kMaxIters: return "max-iters";
    case SolveStatus::kNumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

KktReport kkt_report(const ConicProgram& prog, const ConicSolution& sol) {
  KktReport report{};
  report.primal_obj = prog.objective.dot(sol.x);
  report.dual_obj = 0.0;
  Eigen::VectorXd atz = Eigen::VectorXd::Zero(prog.num_vars);
  for (std::size_t j = 0; j < prog.blocks.size(); ++j) {
    const auto& block = prog.blocks[j];
    Eigen::MatrixXd slack = block.G;
    for (int i = 0; i < prog.num_vars; ++i) slack.noalias() -= sol.x[i] * block.A[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_s(slack, Eigen::EigenvaluesOnly);
    report.primal_cone_violation =
        std::max(report.primal_cone_violation, -eig_s.eigenvalues().minCoeff());

    const auto& z = sol.Z[j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_z(z, Eigen::EigenvaluesOnly);
    report.dual_cone_violation =
        std::max(report.dual_cone_violation, -eig_z.eigenvalues().minCoeff());
    report.complementarity += slack.cwiseProduct(z).sum();
    report.dual_obj += block.G.cwiseProduct(z).sum();
    for (int i = 0; i < prog.num_vars; ++i) atz[i] += block.A[i].cwiseProduct(z).sum();
  }
  report.primal_cone_violation = std::max(report.primal_cone_violation, 0.0);
  report.dual_cone_violation = std::max(report.dual_cone_violation, 0.0);
  report.dual_res = (prog.objective - atz).cwiseAbs().maxCoeff();
  report.rel_gap = std::abs(report.primal_obj - report.dual_obj) /
                   (1.0 + std::abs(report.primal_obj) + std::abs(report.dual_obj));
  return report;
}

ConicProgram fix_variable(const ConicProgram& prog, int index, double value) {
  if (index < 0 || index >= prog.num_vars) throw DimensionError("fix_variable: bad index");
  ConicProgram out;
  out.num_vars = prog.num_vars - 1;
  out.objective.resize(out.num_vars);
  int k = 0;
  for (int i = 0; i < prog.num_vars; ++i) {
    if (i == index) continue;
    out.objective[k++] = prog.objective[i];
    if (!prog.labels.empty()) out.labels.push_back(prog.labels[static_cast<std::size_t>(i)]);
  }
  for (const auto& block : prog.blocks) {
    ConicBlock nb;
    nb.G = block.G - value * block.A[static_cast<std::size_t>(index)];
    for (int i = 0; i < prog.num_vars; ++i) {
      if (i == index) continue;
      nb.A.push_back(block.A[static_cast<std::size_t>(i)]);
    }
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

std::string to_debug_json(const ConicProgram& prog) {
  nlohmann::ordered_json doc;
  doc["num_vars"] = prog.num_vars;
  doc["objective"] = std::vector<double>(prog.objective.data(),
                                         prog.objective.data() + prog.objective.size());
  doc["matrix_layout"] = "lower-triangle-row-major";
  auto lower = [](const Eigen::MatrixXd& m) {
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(m.rows() * (m.rows() + 1) / 2));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c <= r; ++c) flat.push_back(m(r, c));
    }
    return flat;
  };
  doc["blocks"] = nlohmann::ordered_json::array();
  for (const auto& block : prog.blocks) {
    nlohmann::ordered_json jb;
    jb["size"] = block.G.rows();
    jb["G"] = lower(block.G);
    jb["A"] = nlohmann::ordered_json::array();
    for (const auto& a : block.A) jb["A"].push_back(lower(a));
    doc["blocks"].push_back(std::move(jb));
  }
  if (!prog.labels.empty()) doc["labels"] = prog.labels;
  return doc.dump(2);
}

}  // namespace momdec
