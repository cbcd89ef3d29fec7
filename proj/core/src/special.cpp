#include "gshannon/special.hpp"

#include <cmath>
#include <stdexcept>

namespace gshannon {

namespace {

// (sqrt(pi)/2) erf(x) = x e^{-x^2} sum_k (2x^2)^k / (2k+1)!!, all terms
// positive, fast for x < 2.
ExtendedReal tail_by_series(double x) {
  const ExtendedReal x2 = two_prod(x, x);
  const ExtendedReal x2_twice = mul_pwr2(x2, 2.0);
  ExtendedReal term(1.0);
  ExtendedReal sum(1.0);
  for (int k = 1; k < 200; ++k) {
    term = term * x2_twice / static_cast<double>(2 * k + 1);
    sum = sum + term;
    if (term.hi < sum.hi * 1e-34) break;
  }
  const ExtendedReal erf_half_sqrtpi = exp(-x2) * x * sum;
  return xr::half_sqrt_pi - erf_half_sqrtpi;
}

// tail(x) = (e^{-x^2}/2) / (x + (1/2)/(x + 1/(x + (3/2)/(x + 2/(x + ...)))))
// evaluated by the modified Lentz algorithm; the Legendre continued fraction
// for erfc, sharp for x >= 2.
ExtendedReal tail_by_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  ExtendedReal f(tiny);
  ExtendedReal c(tiny);
  ExtendedReal d(0.0);
  for (int k = 1; k < 500; ++k) {
    const double a = (k == 1) ? 1.0 : 0.5 * (k - 1);
    d = ExtendedReal(x) + d * a;
    if (d.hi == 0.0) d = ExtendedReal(tiny);
    c = ExtendedReal(x) + ExtendedReal(a) / c;
    if (c.hi == 0.0) c = ExtendedReal(tiny);
    d = 1.0 / d;
    const ExtendedReal delta = c * d;
    f = f * delta;
    if (std::abs(delta.hi - 1.0) + std::abs(delta.lo) < 1e-29) {
      const ExtendedReal x2 = two_prod(x, x);
      return mul_pwr2(exp(-x2) * f, 0.5);
    }
  }
  throw std::runtime_error("gauss_tail: continued fraction did not converge");
}

}  // namespace

ExtendedReal gauss_tail_xr(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gauss_tail: non-finite argument");
  if (x < 0.0) return xr::sqrt_pi - gauss_tail_xr(-x);
  if (x >= 40.0) return ExtendedReal(0.0);
  if (x == 0.0) return xr::half_sqrt_pi;
  return x < 2.0 ? tail_by_series(x) : tail_by_continued_fraction(x);
}

double gauss_tail(double x) { return gauss_tail_xr(x).to_double(); }

MillsTriple mills_bounds(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("mills_bounds: requires x > 0");
  }
  const double emx2 = std::exp(-x * x);
  return {emx2 / (x + std::sqrt(x * x + 2.0)),
          emx2 / (x + std::sqrt(x * x + 4.0 / xr::pi.hi)),
          emx2 / (2.0 * x)};
}

double eps_lower_threshold(double eps) {
  if (!(eps > 0.0) || !(eps <= 1.0)) {
    throw std::domain_error("eps_lower: requires 0 < eps <= 1");
  }
  return std::sqrt(2.0 / (eps * (2.0 + eps)));
}

double eps_lower(double x, double eps) {
  const double threshold = eps_lower_threshold(eps);
  // 4-ulp slack so x computed independently as the exact threshold is accepted.
  if (!std::isfinite(x) || x < threshold * (1.0 - 4e-16)) {
    throw std::domain_error("eps_lower: x below sqrt(2/(eps(2+eps))), bound not certified");
  }
  return std::exp(-x * x) / ((2.0 + eps) * x);
}

}  // namespace gshannon
