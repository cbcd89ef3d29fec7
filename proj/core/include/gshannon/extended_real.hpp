#pragma once

#ifdef __FAST_MATH__
#error "extended-real arithmetic needs strict IEEE float semantics; do not compile with -ffast-math"
#endif

#include <cmath>
#include <span>

namespace gshannon {

/// Unevaluated high/low double pair ("double-double") giving roughly twice
/// native precision.  Invariant after every operation: hi == fl(hi + lo),
/// i.e. hi is the double nearest the represented value and |lo| <= ulp(hi)/2.
struct ExtendedReal {
  double hi = 0.0;
  double lo = 0.0;

  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double h) : hi(h) {}
  constexpr ExtendedReal(double h, double l) : hi(h), lo(l) {}

  /// Nearest native double of the represented value.
  constexpr double to_double() const { return hi; }
};

// --- error-free transformations -------------------------------------------

/// s + err == a + b exactly.
inline ExtendedReal two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

/// two_sum under the precondition |a| >= |b| (or a == 0).
inline ExtendedReal quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

/// p + err == a * b exactly.
inline ExtendedReal two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// --- arithmetic -------------------------------------------------------------

inline ExtendedReal operator-(const ExtendedReal& a) { return {-a.hi, -a.lo}; }

inline ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
  ExtendedReal s = two_sum(a.hi, b.hi);
  const ExtendedReal t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline ExtendedReal operator+(const ExtendedReal& a, double b) {
  ExtendedReal s = two_sum(a.hi, b);
  s.lo += a.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline ExtendedReal operator+(double a, const ExtendedReal& b) { return b + a; }

inline ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) { return a + (-b); }
inline ExtendedReal operator-(const ExtendedReal& a, double b) { return a + (-b); }
inline ExtendedReal operator-(double a, const ExtendedReal& b) { return (-b) + a; }

inline ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b) {
  ExtendedReal p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline ExtendedReal operator*(const ExtendedReal& a, double b) {
  ExtendedReal p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline ExtendedReal operator*(double a, const ExtendedReal& b) { return b * a; }

inline ExtendedReal operator/(const ExtendedReal& a, const ExtendedReal& b) {
  const double q1 = a.hi / b.hi;
  ExtendedReal r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  ExtendedReal q = quick_two_sum(q1, q2);
  return q + q3;
}

inline ExtendedReal operator/(const ExtendedReal& a, double b) { return a / ExtendedReal(b); }
inline ExtendedReal operator/(double a, const ExtendedReal& b) { return ExtendedReal(a) / b; }

inline ExtendedReal& operator+=(ExtendedReal& a, const ExtendedReal& b) { return a = a + b; }
inline ExtendedReal& operator+=(ExtendedReal& a, double b) { return a = a + b; }
inline ExtendedReal& operator-=(ExtendedReal& a, const ExtendedReal& b) { return a = a - b; }
inline ExtendedReal& operator*=(ExtendedReal& a, const ExtendedReal& b) { return a = a * b; }
inline ExtendedReal& operator*=(ExtendedReal& a, double b) { return a = a * b; }

// Represented-value comparisons; valid because of the renormalization invariant.
inline bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  return a.hi == b.hi && a.lo == b.lo;
}
inline bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return b < a; }
inline bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return !(b < a); }
inline bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return !(a < b); }

inline ExtendedReal abs(const ExtendedReal& a) { return a.hi < 0.0 ? -a : a; }

/// Exact scaling by a power of two.
inline ExtendedReal mul_pwr2(const ExtendedReal& a, double p) { return {a.hi * p, a.lo * p}; }

// --- transcendentals (declared here, defined in extended_real.cpp) ----------

ExtendedReal sqrt(const ExtendedReal& a);
ExtendedReal exp(const ExtendedReal& a);
ExtendedReal sin(const ExtendedReal& a);
ExtendedReal cos(const ExtendedReal& a);
ExtendedReal ldexp(const ExtendedReal& a, int n);

// Frequently used constants.
namespace xr {
inline constexpr ExtendedReal pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr ExtendedReal two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr ExtendedReal half_pi{1.5707963267948966, 6.123233995736766e-17};
inline constexpr ExtendedReal ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr ExtendedReal sqrt_pi{1.772453850905516, -7.666586499825799e-17};
inline constexpr ExtendedReal half_sqrt_pi{0.886226925452758, -3.8332932499128993e-17};
}  // namespace xr

/// Sum of `terms` in the given order, each addition exact to ExtendedReal
/// precision.  The result does not degrade with sequence length the way a
/// plain double accumulator does.
ExtendedReal comp_sum(std::span<const double> terms);

}  // namespace gshannon
