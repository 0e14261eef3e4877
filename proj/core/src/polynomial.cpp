#include "momdec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "momdec/errors.hpp"

namespace momdec {

Polynomial Polynomial::constant(int n, double c) {
  Polynomial p(n);
  p.add_term(MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, double coeff) {
  Polynomial p(alpha.dimension());
  p.add_term(alpha, coeff);
  return p;
}

Polynomial Polynomial::variable(int n, int i) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(MultiIndex(std::move(e)));
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [alpha, c] : terms_) {
    deg = std::max(deg, std::accumulate(alpha.begin(), alpha.end(), 0));
  }
  return deg;
}

Polynomial& Polynomial::add_term(const MultiIndex& alpha, double coeff) {
  if (alpha.dimension() != n_) throw DimensionError("Polynomial: dimension mismatch");
  terms_[alpha.exponents()] += coeff;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (n_ != other.n_) throw DimensionError("Polynomial: dimension mismatch");
  Polynomial out = *this;
  for (const auto& [alpha, c] : other.terms_) out.terms_[alpha] += c;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + other * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (n_ != other.n_) throw DimensionError("Polynomial: dimension mismatch");
  Polynomial out(n_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      std::vector<int> sum(a.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
      out.terms_[std::move(sum)] += ca * cb;
    }
  }
  return out;
}

Polynomial Polynomial::operator*(double s) const {
  Polynomial out = *this;
  for (auto& [alpha, c] : out.terms_) c *= s;
  return out;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionError("Polynomial: point dimension");
  double value = 0.0;
  for (const auto& [alpha, c] : terms_) {
    double term = c;
    for (std::size_t i = 0; i < alpha.size(); ++i) term *= std::pow(x[i], alpha[i]);
    value += term;
  }
  return value;
}

double riesz(const MomentSequence& z, const Polynomial& f) {
  if (f.dimension() != z.dimension()) throw DimensionError("riesz: dimension mismatch");
  double value = 0.0;
  for (const auto& [alpha, c] : f.terms()) {
    if (c == 0.0) continue;
    value += c * z.at(MultiIndex(alpha));
  }
  return value;
}

}  // namespace momdec
