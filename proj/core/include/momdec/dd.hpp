#pragma once

// Double-double arithmetic (~31 significant decimal digits). Used where plain
// doubles lose the race against moment-matrix conditioning: orthonormal basis
// construction and congruence transforms. Algorithms are the classic
// error-free transformations (Dekker, Knuth, Bailey's QD library).
//
// Requires round-to-nearest IEEE doubles; do not compile with -ffast-math.

#include <cmath>

namespace momdec {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr dd() = default;
  constexpr dd(double h) : hi(h), lo(0.0) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace dd_detail {

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// Assumes |a| >= |b|.
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline dd operator+(const dd& a, const dd& b) {
  using namespace dd_detail;
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(const dd& a) { return {-a.hi, -a.lo}; }
inline dd operator-(const dd& a, const dd& b) { return a + (-b); }

inline dd operator*(const dd& a, const dd& b) {
  using namespace dd_detail;
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(const dd& a, const dd& b) {
  using namespace dd_detail;
  double q1 = a.hi / b.hi;
  dd r = a - dd(q1) * b;
  double q2 = r.hi / b.hi;
  r = r - dd(q2) * b;
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd& operator+=(dd& a, const dd& b) { return a = a + b; }
inline dd& operator-=(dd& a, const dd& b) { return a = a - b; }
inline dd& operator*=(dd& a, const dd& b) { return a = a * b; }
inline dd& operator/=(dd& a, const dd& b) { return a = a / b; }

inline bool operator<(const dd& a, const dd& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const dd& a, const dd& b) { return b < a; }
inline bool operator<=(const dd& a, const dd& b) { return !(b < a); }

inline dd dd_abs(const dd& a) { return a.hi < 0.0 ? -a : a; }

inline dd dd_sqrt(const dd& a) {
  if (a.hi == 0.0 && a.lo == 0.0) return {0.0, 0.0};
  double x = std::sqrt(a.hi);
  // One Newton step in dd doubles the accuracy of the double seed.
  dd y(x);
  dd r = a - y * y;
  y += r / dd(2.0 * x);
  return y;
}

}  // namespace momdec
