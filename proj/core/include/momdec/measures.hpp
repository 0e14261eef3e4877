#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "momdec/moment_sequence.hpp"
#include "momdec/multi_index.hpp"

namespace momdec {

class MeasureSpec;

struct UniformInterval {
  double a, b;  // a < b; probability measure on [a, b]
};

struct UniformBox {
  std::vector<std::pair<double, double>> bounds;  // per-axis (a, b), a < b
};

struct Dirac {
  std::vector<double> point;
};

/// Product measure on R^n with density proportional to exp(-sum x_i^2),
/// normalized; per-axis variance 1/2.
struct GaussianProduct {
  int n;
};

/// Normalized arc length on the unit circle x1^2 + x2^2 = 1 (n = 2).
struct UniformCircle {};

struct WeightedComponent {
  double weight;
  std::shared_ptr<const MeasureSpec> spec;
};

struct Mixture {
  std::vector<WeightedComponent> components;  // weights > 0
};

struct Scaled {
  double factor;  // > 0
  std::shared_ptr<const MeasureSpec> inner;
};

/// Value-semantic description of a measure with closed-form moments.
class MeasureSpec {
 public:
  using Variant =
      std::variant<UniformInterval, UniformBox, Dirac, GaussianProduct, UniformCircle,
                   Mixture, Scaled>;

  static MeasureSpec uniform_interval(double a, double b);
  static MeasureSpec uniform_box(std::vector<std::pair<double, double>> bounds);
  static MeasureSpec dirac(std::vector<double> point);
  static MeasureSpec gaussian_product(int n);
  static MeasureSpec uniform_circle();
  static MeasureSpec mixture(std::vector<std::pair<double, MeasureSpec>> components);
  static MeasureSpec scaled(double factor, MeasureSpec inner);

  int dimension() const;
  std::string describe() const;
  const Variant& variant() const { return v_; }

 private:
  explicit MeasureSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Ground-truth decomposition instance: mu = p*nu + (1-p)*psi, 0 < p < 1.
struct GroundTruth {
  MeasureSpec nu;
  MeasureSpec psi;
  double p;
  double gamma;

  MeasureSpec mu() const {
    return MeasureSpec::mixture({{p, nu}, {1.0 - p, psi}});
  }
};

/// All moments up to |alpha| <= max_degree, by closed form.
MomentSequence exact_moments(const MeasureSpec& spec, int max_degree);

struct QuadratureResult {
  double value;
  double error_estimate;
};

/// Brute-force numerical integral of x^alpha d(spec), used in tests to certify
/// exact_moments. resolution = grid nodes per axis; 0 picks the default
/// (1e6 in one dimension, 2000 per axis otherwise).
QuadratureResult quadrature_oracle(const MeasureSpec& spec, const MultiIndex& alpha,
                                   long resolution = 0);

using DensityFn = std::function<double(const std::vector<double>&)>;

/// Grid evaluation of integral of min(gamma, f) * x^alpha d(lambda) for a
/// uniform reference measure (interval or box). Independent oracle for the
/// truncated decomposition target.
double truncated_density_moments(const DensityFn& density, const MeasureSpec& lambda,
                                 double gamma, const MultiIndex& alpha,
                                 long resolution = 0);

}  // namespace momdec
