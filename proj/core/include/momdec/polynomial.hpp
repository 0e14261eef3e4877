#pragma once

#include <map>
#include <vector>

#include "momdec/moment_sequence.hpp"
#include "momdec/multi_index.hpp"

namespace momdec {

/// Sparse polynomial as a coefficient map alpha -> f_alpha.
class Polynomial {
 public:
  using CoefficientMap = std::map<std::vector<int>, double>;

  explicit Polynomial(int n) : n_(n) {}
  static Polynomial constant(int n, double c);
  static Polynomial monomial(const MultiIndex& alpha, double coeff = 1.0);
  /// x_i as a polynomial in n variables (0-based i).
  static Polynomial variable(int n, int i);

  int dimension() const { return n_; }
  int degree() const;
  const CoefficientMap& terms() const { return terms_; }

  Polynomial& add_term(const MultiIndex& alpha, double coeff);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double s) const;
  Polynomial squared() const { return *this * *this; }

  double evaluate(const std::vector<double>& x) const;

 private:
  int n_;
  CoefficientMap terms_;
};

/// Riesz functional L_z(f) = sum_alpha f_alpha z_alpha.
/// Throws DegreeError if f has a monomial above z.max_degree().
double riesz(const MomentSequence& z, const Polynomial& f);

}  // namespace momdec
