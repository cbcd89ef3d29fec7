#include "gshannon/extended_real.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace gshannon {

namespace {

// 1/k! for k = 0..32, computed once in extended precision.
const std::array<ExtendedReal, 33>& inv_factorials() {
  static const std::array<ExtendedReal, 33> table = [] {
    std::array<ExtendedReal, 33> t{};
    ExtendedReal f(1.0);
    t[0] = f;
    for (int k = 1; k < 33; ++k) {
      f = f / static_cast<double>(k);
      t[k] = f;
    }
    return t;
  }();
  return table;
}

// sin on |x| <= pi/4 + eps by Taylor series.
ExtendedReal sin_taylor(const ExtendedReal& x) {
  if (x.hi == 0.0) return ExtendedReal(0.0);
  const auto& inv_fact = inv_factorials();
  const ExtendedReal x2 = x * x;
  ExtendedReal sum = x;
  ExtendedReal pow = x;
  double sign = -1.0;
  for (int m = 3; m < 33; m += 2) {
    pow = pow * x2;
    const ExtendedReal term = pow * inv_fact[m];
    sum = sum + mul_pwr2(term, sign);
    sign = -sign;
    if (std::abs(term.hi) < std::abs(sum.hi) * 1e-33) break;
  }
  return sum;
}

// cos on |x| <= pi/4 + eps by Taylor series.
ExtendedReal cos_taylor(const ExtendedReal& x) {
  if (x.hi == 0.0) return ExtendedReal(1.0);
  const auto& inv_fact = inv_factorials();
  const ExtendedReal x2 = x * x;
  ExtendedReal sum = 1.0 - mul_pwr2(x2, 0.5);
  ExtendedReal pow = x2;
  double sign = 1.0;
  for (int m = 4; m < 33; m += 2) {
    pow = pow * x2;
    const ExtendedReal term = pow * inv_fact[m];
    sum = sum + mul_pwr2(term, sign);
    sign = -sign;
    if (std::abs(term.hi) < 1e-33) break;
  }
  return sum;
}

// Reduce a to t with a = z*(2pi) + q*(pi/2) + t, |t| <= pi/4 + eps,
// q in {-2,...,2}.  Adequate for |a| up to ~1e8; arguments here stay < 1e3.
void trig_reduce(const ExtendedReal& a, ExtendedReal& t, int& quadrant) {
  const double z = std::nearbyint(a.hi / xr::two_pi.hi);
  ExtendedReal x = a - xr::two_pi * z;
  const double q = std::nearbyint(x.hi / xr::half_pi.hi);
  t = x - xr::half_pi * q;
  quadrant = static_cast<int>(q);
}

}  // namespace

ExtendedReal sqrt(const ExtendedReal& a) {
  if (a.hi == 0.0) return ExtendedReal(0.0);
  // One Newton step on 1/sqrt, starting from the double estimate.
  const double x = 1.0 / std::sqrt(a.hi);
  const double ax = a.hi * x;
  const ExtendedReal err = a - two_prod(ax, ax);
  return quick_two_sum(ax, err.hi * (x * 0.5));
}

ExtendedReal ldexp(const ExtendedReal& a, int n) {
  return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)};
}

ExtendedReal exp(const ExtendedReal& a) {
  // exp(k r + m ln2) = 2^m exp(r)^k with k = 512, |k r| <= ln2 / 2.
  constexpr double k = 512.0;
  constexpr double inv_k = 1.0 / k;

  if (a.hi <= -709.0) return ExtendedReal(0.0);
  if (a.hi >= 709.0) return ExtendedReal(std::numeric_limits<double>::infinity());
  if (a.hi == 0.0 && a.lo == 0.0) return ExtendedReal(1.0);

  const auto& inv_fact = inv_factorials();
  const double m = std::floor(a.hi / xr::ln2.hi + 0.5);
  const ExtendedReal r = mul_pwr2(a - xr::ln2 * m, inv_k);

  // s tracks exp(r) - 1.
  ExtendedReal p = r * r;
  ExtendedReal s = r + mul_pwr2(p, 0.5);
  p = p * r;
  ExtendedReal term = p * inv_fact[3];
  int i = 3;
  do {
    s = s + term;
    p = p * r;
    ++i;
    term = p * inv_fact[i];
  } while (std::abs(term.hi) > inv_k * 1e-34 && i < 12);
  s = s + term;

  for (int j = 0; j < 9; ++j) {  // (1+s)^512 - 1 by repeated squaring
    s = mul_pwr2(s, 2.0) + s * s;
  }
  s = s + 1.0;
  return ldexp(s, static_cast<int>(m));
}

ExtendedReal sin(const ExtendedReal& a) {
  if (a.hi == 0.0 && a.lo == 0.0) return ExtendedReal(0.0);
  ExtendedReal t;
  int q;
  trig_reduce(a, t, q);
  switch (((q % 4) + 4) % 4) {
    case 0: return sin_taylor(t);
    case 1: return cos_taylor(t);
    case 2: return -sin_taylor(t);
    default: return -cos_taylor(t);
  }
}

ExtendedReal cos(const ExtendedReal& a) {
  if (a.hi == 0.0 && a.lo == 0.0) return ExtendedReal(1.0);
  ExtendedReal t;
  int q;
  trig_reduce(a, t, q);
  switch (((q % 4) + 4) % 4) {
    case 0: return cos_taylor(t);
    case 1: return -sin_taylor(t);
    case 2: return -cos_taylor(t);
    default: return sin_taylor(t);
  }
}

ExtendedReal comp_sum(std::span<const double> terms) {
  ExtendedReal acc;
  for (const double v : terms) acc += v;
  return acc;
}

}  // namespace gshannon
