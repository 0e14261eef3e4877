#include "momdec/measures.hpp"

#include <cmath>
#include <sstream>

#include "momdec/errors.hpp"

namespace momdec {

MeasureSpec MeasureSpec::uniform_interval(double a, double b) {
  if (!(a < b)) throw Error("uniform_interval: requires a < b");
  return MeasureSpec(UniformInterval{a, b});
}

MeasureSpec MeasureSpec::uniform_box(std::vector<std::pair<double, double>> bounds) {
  if (bounds.empty()) throw DimensionError("uniform_box: needs at least one axis");
  for (const auto& [a, b] : bounds) {
    if (!(a < b)) throw Error("uniform_box: requires a < b per axis");
  }
  return MeasureSpec(UniformBox{std::move(bounds)});
}

MeasureSpec MeasureSpec::dirac(std::vector<double> point) {
  if (point.empty()) throw DimensionError("dirac: needs at least one coordinate");
  return MeasureSpec(Dirac{std::move(point)});
}

MeasureSpec MeasureSpec::gaussian_product(int n) {
  if (n < 1) throw DimensionError("gaussian_product: dimension must be >= 1");
  return MeasureSpec(GaussianProduct{n});
}

MeasureSpec MeasureSpec::uniform_circle() { return MeasureSpec(UniformCircle{}); }

MeasureSpec MeasureSpec::mixture(std::vector<std::pair<double, MeasureSpec>> components) {
  if (components.empty()) throw Error("mixture: needs at least one component");
  Mixture mix;
  const int n = components.front().second.dimension();
  for (auto& [w, spec] : components) {
    if (!(w > 0.0)) throw Error("mixture: weights must be positive");
    if (spec.dimension() != n) throw DimensionError("mixture: component dimensions differ");
    mix.components.push_back({w, std::make_shared<const MeasureSpec>(std::move(spec))});
  }
  return MeasureSpec(std::move(mix));
}

MeasureSpec MeasureSpec::scaled(double factor, MeasureSpec inner) {
  if (!(factor > 0.0)) throw Error("scaled: factor must be positive");
  return MeasureSpec(Scaled{factor, std::make_shared<const MeasureSpec>(std::move(inner))});
}

int MeasureSpec::dimension() const {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, UniformInterval>) return 1;
        if constexpr (std::is_same_v<T, UniformBox>) return static_cast<int>(m.bounds.size());
        if constexpr (std::is_same_v<T, Dirac>) return static_cast<int>(m.point.size());
        if constexpr (std::is_same_v<T, GaussianProduct>) return m.n;
        if constexpr (std::is_same_v<T, UniformCircle>) return 2;
        if constexpr (std::is_same_v<T, Mixture>) return m.components.front().spec->dimension();
        if constexpr (std::is_same_v<T, Scaled>) return m.inner->dimension();
      },
      v_);
}

std::string MeasureSpec::describe() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, UniformInterval>) {
          os << "uniform[" << m.a << "," << m.b << "]";
        } else if constexpr (std::is_same_v<T, UniformBox>) {
          os << "uniform-box";
          for (const auto& [a, b] : m.bounds) os << "[" << a << "," << b << "]";
        } else if constexpr (std::is_same_v<T, Dirac>) {
          os << "dirac(";
          for (std::size_t i = 0; i < m.point.size(); ++i) {
            os << (i ? "," : "") << m.point[i];
          }
          os << ")";
        } else if constexpr (std::is_same_v<T, GaussianProduct>) {
          os << "gaussian^" << m.n;
        } else if constexpr (std::is_same_v<T, UniformCircle>) {
          os << "circle";
        } else if constexpr (std::is_same_v<T, Mixture>) {
          os << "mix(";
          for (std::size_t i = 0; i < m.components.size(); ++i) {
            os << (i ? "+" : "") << m.components[i].weight << "*"
               << m.components[i].spec->describe();
          }
          os << ")";
        } else if constexpr (std::is_same_v<T, Scaled>) {
          os << m.factor << "*" << m.inner->describe();
        }
      },
      v_);
  return os.str();
}

namespace {

// (b^{k+1} - a^{k+1}) / ((k+1)(b-a))
double uniform_interval_moment(double a, double b, int k) {
  return (std::pow(b, k + 1) - std::pow(a, k + 1)) / ((k + 1) * (b - a));
}

// E[x^{2k}] for the exp(-x^2) axis via m_{2k} = (2k-1) m_{2k-2} / 2.
std::vector<double> gaussian_axis_moments(int max_degree) {
  std::vector<double> m(static_cast<std::size_t>(max_degree) + 1, 0.0);
  m[0] = 1.0;
  for (int k = 2; k <= max_degree; k += 2) {
    m[static_cast<std::size_t>(k)] = (k - 1) * m[static_cast<std::size_t>(k - 2)] / 2.0;
  }
  return m;
}

// (1/2pi) Int cos^j sin^k = (j-1)!!(k-1)!! / (j+k)!! for j, k even, else 0.
double circle_moment(int j, int k) {
  if (j % 2 != 0 || k % 2 != 0) return 0.0;
  double value = 1.0;
  for (int i = j - 1; i >= 1; i -= 2) value *= i;
  for (int i = k - 1; i >= 1; i -= 2) value *= i;
  for (int i = j + k; i >= 2; i -= 2) value /= i;
  return value;
}

double moment_of(const MeasureSpec& spec, const MultiIndex& alpha);

struct MomentVisitor {
  const MultiIndex& alpha;

  double operator()(const UniformInterval& m) const {
    return uniform_interval_moment(m.a, m.b, alpha[0]);
  }
  double operator()(const UniformBox& m) const {
    double value = 1.0;
    for (int i = 0; i < alpha.dimension(); ++i) {
      const auto& [a, b] = m.bounds[static_cast<std::size_t>(i)];
      value *= uniform_interval_moment(a, b, alpha[i]);
    }
    return value;
  }
  double operator()(const Dirac& m) const {
    double value = 1.0;
    for (int i = 0; i < alpha.dimension(); ++i) {
      value *= std::pow(m.point[static_cast<std::size_t>(i)], alpha[i]);
    }
    return value;
  }
  double operator()(const GaussianProduct&) const {
    const auto axis = gaussian_axis_moments(alpha.total_degree());
    double value = 1.0;
    for (int i = 0; i < alpha.dimension(); ++i) {
      if (alpha[i] % 2 != 0) return 0.0;
      value *= axis[static_cast<std::size_t>(alpha[i])];
    }
    return value;
  }
  double operator()(const UniformCircle&) const { return circle_moment(alpha[0], alpha[1]); }
  double operator()(const Mixture& m) const {
    double value = 0.0;
    for (const auto& c : m.components) value += c.weight * moment_of(*c.spec, alpha);
    return value;
  }
  double operator()(const Scaled& m) const { return m.factor * moment_of(*m.inner, alpha); }
};

double moment_of(const MeasureSpec& spec, const MultiIndex& alpha) {
  return std::visit(MomentVisitor{alpha}, spec.variant());
}

}  // namespace

MomentSequence exact_moments(const MeasureSpec& spec, int max_degree) {
  const int n = spec.dimension();
  BasisIndexer basis(n, max_degree);
  Eigen::VectorXd values(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    values[static_cast<Eigen::Index>(i)] = moment_of(spec, basis[i]);
  }
  return MomentSequence(n, max_degree, std::move(values), spec.describe());
}

namespace {

long default_resolution(int n) { return n == 1 ? 1000000L : 2000L; }

// Midpoint rule for a probability measure uniform on [a, b].
double midpoint_uniform(double a, double b, int power, long nodes) {
  const double h = (b - a) / static_cast<double>(nodes);
  double sum = 0.0;
  for (long i = 0; i < nodes; ++i) {
    sum += std::pow(a + (static_cast<double>(i) + 0.5) * h, power);
  }
  return sum / static_cast<double>(nodes);
}

// Midpoint rule for Int x^power exp(-x^2)/sqrt(pi) on [-L, L].
double midpoint_gaussian_axis(int power, long nodes) {
  const double L = 10.0;
  const double h = 2.0 * L / static_cast<double>(nodes);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  double sum = 0.0;
  for (long i = 0; i < nodes; ++i) {
    const double x = -L + (static_cast<double>(i) + 0.5) * h;
    sum += std::pow(x, power) * std::exp(-x * x);
  }
  return sum * h * inv_sqrt_pi;
}

double midpoint_circle(int j, int k, long nodes) {
  const double h = 2.0 * M_PI / static_cast<double>(nodes);
  double sum = 0.0;
  for (long i = 0; i < nodes; ++i) {
    const double t = (static_cast<double>(i) + 0.5) * h;
    sum += std::pow(std::cos(t), j) * std::pow(std::sin(t), k);
  }
  return sum / static_cast<double>(nodes);
}

double quadrature_value(const MeasureSpec& spec, const MultiIndex& alpha, long nodes) {
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, UniformInterval>) {
          return midpoint_uniform(m.a, m.b, alpha[0], nodes);
        } else if constexpr (std::is_same_v<T, UniformBox>) {
          double value = 1.0;
          for (int i = 0; i < alpha.dimension(); ++i) {
            const auto& [a, b] = m.bounds[static_cast<std::size_t>(i)];
            value *= midpoint_uniform(a, b, alpha[i], nodes);
          }
          return value;
        } else if constexpr (std::is_same_v<T, Dirac>) {
          double value = 1.0;
          for (int i = 0; i < alpha.dimension(); ++i) {
            value *= std::pow(m.point[static_cast<std::size_t>(i)], alpha[i]);
          }
          return value;
        } else if constexpr (std::is_same_v<T, GaussianProduct>) {
          double value = 1.0;
          for (int i = 0; i < alpha.dimension(); ++i) {
            value *= midpoint_gaussian_axis(alpha[i], nodes);
          }
          return value;
        } else if constexpr (std::is_same_v<T, UniformCircle>) {
          return midpoint_circle(alpha[0], alpha[1], nodes);
        } else if constexpr (std::is_same_v<T, Mixture>) {
          double value = 0.0;
          for (const auto& c : m.components) {
            value += c.weight * quadrature_value(*c.spec, alpha, nodes);
          }
          return value;
        } else if constexpr (std::is_same_v<T, Scaled>) {
          return m.factor * quadrature_value(*m.inner, alpha, nodes);
        }
      },
      spec.variant());
}

}  // namespace

QuadratureResult quadrature_oracle(const MeasureSpec& spec, const MultiIndex& alpha,
                                   long resolution) {
  if (alpha.dimension() != spec.dimension()) {
    throw DimensionError("quadrature_oracle: dimension mismatch");
  }
  long nodes = resolution > 0 ? resolution : default_resolution(spec.dimension());
  if (std::holds_alternative<UniformCircle>(spec.variant())) {
    nodes = std::max(nodes, 100000L);
  }
  const double fine = quadrature_value(spec, alpha, nodes);
  const double coarse = quadrature_value(spec, alpha, nodes / 2);
  return {fine, std::abs(fine - coarse) + 1e-12 * (1.0 + std::abs(fine))};
}

double truncated_density_moments(const DensityFn& density, const MeasureSpec& lambda,
                                 double gamma, const MultiIndex& alpha,
                                 long resolution) {
  const long nodes = resolution > 0 ? resolution : default_resolution(lambda.dimension());
  if (const auto* interval = std::get_if<UniformInterval>(&lambda.variant())) {
    if (alpha.dimension() != 1) throw DimensionError("truncated_density_moments: alpha");
    const double h = (interval->b - interval->a) / static_cast<double>(nodes);
    std::vector<double> x(1);
    double sum = 0.0;
    for (long i = 0; i < nodes; ++i) {
      x[0] = interval->a + (static_cast<double>(i) + 0.5) * h;
      sum += std::min(gamma, density(x)) * std::pow(x[0], alpha[0]);
    }
    return sum / static_cast<double>(nodes);
  }
  if (const auto* box = std::get_if<UniformBox>(&lambda.variant())) {
    const int n = static_cast<int>(box->bounds.size());
    if (alpha.dimension() != n) throw DimensionError("truncated_density_moments: alpha");
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<long> idx(static_cast<std::size_t>(n), 0);
    double total = 0.0;
    const double cells = std::pow(static_cast<double>(nodes), n);
    while (true) {
      double mono = 1.0;
      for (int i = 0; i < n; ++i) {
        const auto& [a, b] = box->bounds[static_cast<std::size_t>(i)];
        const double h = (b - a) / static_cast<double>(nodes);
        x[static_cast<std::size_t>(i)] =
            a + (static_cast<double>(idx[static_cast<std::size_t>(i)]) + 0.5) * h;
        mono *= std::pow(x[static_cast<std::size_t>(i)], alpha[i]);
      }
      total += std::min(gamma, density(x)) * mono;
      int axis = 0;
      while (axis < n && ++idx[static_cast<std::size_t>(axis)] == nodes) {
        idx[static_cast<std::size_t>(axis)] = 0;
        ++axis;
      }
      if (axis == n) break;
    }
    return total / cells;
  }
  throw Error("truncated_density_moments: reference measure must be a uniform interval or box");
}

}  // namespace momdec
