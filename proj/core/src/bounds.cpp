#include "gshannon/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gshannon/errors.hpp"
#include "gshannon/quadrature.hpp"
#include "gshannon/special.hpp"

namespace gshannon {

MillsEpsilon::MillsEpsilon(double e) : eps(e) {
  if (!(e > 0.0) || !(e < 1.0)) {
    throw std::domain_error("MillsEpsilon: eps must lie in (0, 1)");
  }
}

double BoundParams::corridor_min() const {
  return 2.0 / (std::sqrt(eps.eps * (2.0 + eps.eps)) * (xr::pi.hi - delta.delta));
}

double BoundParams::corridor_max() const { return optimal_width(delta, n).r; }

bool BoundParams::r_in_corridor() const {
  return r.r >= corridor_min() && r.r <= corridor_max();
}

namespace {

ExtendedReal pi_minus(double delta) { return xr::pi - delta; }

ExtendedReal c_const_xr(Bandwidth delta, MillsEpsilon eps, GaussWidth r) {
  const double d = delta.delta;
  const double e = eps.eps;
  const ExtendedReal pim = pi_minus(d);
  const ExtendedReal pip = xr::pi + d;
  const ExtendedReal r2 = two_prod(r.r, r.r);
  const ExtendedReal inner =
      2.0 / ((2.0 + e) * pim) - exp(-(xr::two_pi * d * r2)) / pip;
  const ExtendedReal front = 4.0 / ((2.0 + e) * pip * d);
  const ExtendedReal last = 2.0 / ((xr::two_pi - d) * (pim * pim));
  return sin(ExtendedReal(d) * 0.5) * (front * inner - last);
}

}  // namespace

double c_const(Bandwidth delta, MillsEpsilon eps, GaussWidth r) {
  return c_const_xr(delta, eps, r).to_double();
}

long long n_min(Bandwidth delta, MillsEpsilon eps, double c_value) {
  if (!(c_value > 0.0)) {
    throw std::domain_error("n_min: certificate void, c_value must be positive");
  }
  const double d = delta.delta;
  const double e = eps.eps;
  const double pim = xr::pi.hi - d;
  const double second = std::ceil(4.0 / (e * (2.0 + e) * pim) + 1.0);
  const double third = std::ceil(8.0 / (xr::pi.hi * c_value * c_value * std::pow(pim, 5)) - 1.0);
  if (!(second < 9e18) || !(third < 9e18)) {
    throw std::overflow_error("n_min: admissible n exceeds the representable range");
  }
  long long result = 2;
  if (second > static_cast<double>(result)) result = static_cast<long long>(second);
  if (third > static_cast<double>(result)) result = static_cast<long long>(third);
  return result;
}

int admissible_n_min(Bandwidth delta, MillsEpsilon eps) {
  constexpr int kSearchCap = 1 << 20;
  for (int n = 2; n <= kSearchCap; ++n) {
    const double c = c_const(delta, eps, optimal_width(delta, n));
    if (c > 0.0 && n >= n_min(delta, eps, c)) return n;
  }
  throw CertificateError("admissible_n_min: no admissible n (is delta inside (0, pi/2)?)");
}

double c_certificate(Bandwidth delta, MillsEpsilon eps) {
  const int n_star = admissible_n_min(delta, eps);
  return c_const(delta, eps, optimal_width(delta, n_star));
}

double lower_bound_general(const BoundParams& p) {
  const double d = p.delta.delta;
  if (!(d < xr::half_pi.hi)) {
    throw CertificateError("lower_bound_general: requires delta < pi/2");
  }
  if (p.n < 2) throw CertificateError("lower_bound_general: requires n >= 2");
  if (!p.r_in_corridor()) {
    throw CertificateError("lower_bound_general: r outside the certificate corridor");
  }
  const double e = p.eps.eps;
  const double n_floor = std::ceil(4.0 / (e * (2.0 + e) * (xr::pi.hi - d)) + 1.0);
  if (static_cast<double>(p.n) < n_floor) {
    throw CertificateError("lower_bound_general: n below ceil(4/(eps(2+eps)(pi-delta)) + 1)");
  }
  const ExtendedReal c = c_const_xr(p.delta, p.eps, p.r);
  if (!(c.to_double() > 0.0)) {
    throw CertificateError("lower_bound_general: C <= 0, certificate void");
  }

  const ExtendedReal pim = pi_minus(d);
  const ExtendedReal r2 = two_prod(p.r.r, p.r.r);
  const ExtendedReal r3 = r2 * p.r.r;
  const double n = p.n;
  const ExtendedReal nm1(n - 1.0);
  const ExtendedReal main_term = c * exp(-mul_pwr2(pim * pim * r2, 0.5)) / r3;
  const ExtendedReal tail_term = mul_pwr2(sqrt(ExtendedReal(2.0)), 2.0) * r2 *
                                 exp(-(nm1 * nm1) / mul_pwr2(r2, 2.0)) /
                                 (ExtendedReal(n) * (n + 0.5) * nm1 * sqrt(xr::pi));
  const ExtendedReal scale = 1.0 / (xr::pi * sqrt(mul_pwr2(ExtendedReal(d), 2.0)));
  return (scale * (main_term - tail_term)).to_double();
}

namespace {

ExtendedReal lower_bound_opt_xr(Bandwidth delta, int n, double c_value) {
  const double d = delta.delta;
  const ExtendedReal pim = pi_minus(d);
  const ExtendedReal nm1(static_cast<double>(n - 1));
  const ExtendedReal nm1_32 = nm1 * sqrt(nm1);
  const ExtendedReal bracket =
      c_value * pim * sqrt(pim) -
      mul_pwr2(sqrt(ExtendedReal(2.0)), 2.0) / (pim * sqrt(xr::pi)) * nm1_32 /
          (static_cast<double>(n) * (n + 0.5));
  const ExtendedReal decay = exp(-mul_pwr2(pim * nm1, 0.5));
  return bracket * decay / (xr::pi * sqrt(mul_pwr2(ExtendedReal(d), 2.0)) * nm1_32);
}

}  // namespace

double lower_bound_opt(Bandwidth delta, MillsEpsilon eps, int n) {
  if (!(delta.delta < xr::half_pi.hi)) {
    throw CertificateError("lower_bound_opt: requires delta < pi/2");
  }
  const int n_star = admissible_n_min(delta, eps);
  if (n < n_star) {
    throw CertificateError("lower_bound_opt: n below the admissible minimum " +
                           std::to_string(n_star));
  }
  const double c_cert = c_const(delta, eps, optimal_width(delta, n_star));
  return lower_bound_opt_xr(delta, n, c_cert).to_double();
}

double upper_bound_general(Bandwidth delta, GaussWidth r, int n) {
  if (n < 2) throw std::domain_error("upper_bound_general: n must be >= 2");
  const double d = delta.delta;
  const ExtendedReal pim = pi_minus(d);
  const ExtendedReal r2 = two_prod(r.r, r.r);
  const ExtendedReal three_pim = ExtendedReal(3.0) * xr::pi - d;
  const ExtendedReal two_pim = xr::two_pi - d;
  const ExtendedReal ring =
      1.0 + (1.0 + 1.0 / (xr::two_pi * three_pim * r2)) * exp(-(xr::two_pi * two_pim * r2));
  const ExtendedReal bracket =
      ring / (sqrt(mul_pwr2(pim, 2.0)) * r.r) + sqrt(mul_pwr2(ExtendedReal(d), 2.0));
  const ExtendedReal first =
      bracket * exp(-mul_pwr2(pim * pim * r2, 0.5)) / (xr::pi * pim * r.r);
  const ExtendedReal nm1(static_cast<double>(n - 1));
  const ExtendedReal tail = ExtendedReal(r.r) * exp(-(nm1 * nm1) / mul_pwr2(r2, 2.0)) /
                            (xr::pi * static_cast<double>(n) * sqrt(nm1));
  return (first + tail).to_double();
}

double upper_bound_opt(Bandwidth delta, int n) {
  if (n < 2) throw std::domain_error("upper_bound_opt: n must be >= 2");
  const double d = delta.delta;
  const ExtendedReal pim = pi_minus(d);
  const ExtendedReal nm1(static_cast<double>(n - 1));
  const ExtendedReal ring = 1.0 + (1.0 + 1.0 / (ExtendedReal(6.0) * xr::pi)) *
                                      exp(mul_pwr2(-xr::pi, 4.0));
  const ExtendedReal bracket = sqrt(mul_pwr2(ExtendedReal(d), 2.0)) +
                               sqrt(nm1) / static_cast<double>(n) +
                               ring / sqrt(mul_pwr2(nm1, 2.0));
  const ExtendedReal decay = exp(-mul_pwr2(pim * nm1, 0.5));
  return (bracket * decay / (xr::pi * sqrt(pim * nm1))).to_double();
}

double e2_tail_bound(Bandwidth delta, GaussWidth r, int n) {
  (void)delta;  // the tail component depends only on (r, n)
  if (n < 2) throw std::domain_error("e2_tail_bound: n must be >= 2");
  const ExtendedReal r2 = two_prod(r.r, r.r);
  const ExtendedReal nm1(static_cast<double>(n - 1));
  const ExtendedReal value = ExtendedReal(r.r) * exp(-(nm1 * nm1) / mul_pwr2(r2, 2.0)) /
                             (xr::pi * static_cast<double>(n) * sqrt(nm1));
  return value.to_double();
}

LemmaChecks lemma_checks(Bandwidth delta, MillsEpsilon eps, GaussWidth r, int k_max) {
  if (k_max < 50) throw std::domain_error("lemma_checks: k_max must be >= 50");
  const double d = delta.delta;
  const double e = eps.eps;
  const double pim = xr::pi.hi - d;
  const double corridor_floor = 2.0 / (std::sqrt(e * (2.0 + e)) * pim);
  if (r.r < corridor_floor) {
    throw std::domain_error("lemma_checks: r below the corridor floor");
  }
  const double side = 2.0 / ((2.0 + e) * pim) -
                      std::exp(-2.0 * xr::pi.hi * d * r.r * r.r) / (xr::pi.hi + d);
  if (!(side > 0.0)) {
    throw std::domain_error("lemma_checks: bracket 2/((2+eps)(pi-delta)) - e^{-2 pi delta r^2}/(pi+delta) not positive");
  }

  const double rr = r.r;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // Lemma 1: integral over [-delta, delta] of
  //   1 - (1/sqrt(pi)) integral_{(xi-pi)r/sqrt2}^{(xi+pi)r/sqrt2} e^{-tau^2}
  // which equals (tail((xi+pi)r/sqrt2) + tail((pi-xi)r/sqrt2))/sqrt(pi).
  const auto integrand = [rr, inv_sqrt2](double xi) {
    const double hi_arg = (xi + xr::pi.hi) * rr * inv_sqrt2;
    const double lo_arg = (xr::pi.hi - xi) * rr * inv_sqrt2;
    return (gauss_tail(hi_arg) + gauss_tail(lo_arg)) / xr::sqrt_pi.hi;
  };
  const double lhs1 = integrate(integrand, -d, d, 1e-18);

  const ExtendedReal pim_xr = pi_minus(d);
  const ExtendedReal r2 = two_prod(rr, rr);
  const ExtendedReal inner =
      2.0 / ((2.0 + e) * pim_xr) - exp(-(xr::two_pi * d * r2)) / (xr::pi + d);
  const ExtendedReal rhs1_xr = mul_pwr2(sqrt(ExtendedReal(2.0)), 2.0) /
                               ((2.0 + e) * (xr::pi + d) * sqrt(xr::pi)) * inner *
                               exp(-mul_pwr2(pim_xr * pim_xr * r2, 0.5)) / (r2 * rr);
  const double rhs1 = rhs1_xr.to_double();

  // Lemma 2: sum over k >= 1 of the window integrals of e^{-(xi-pi)^2 r^2/2}.
  const auto gauss_window = [rr](double xi) {
    const double u = (xi - xr::pi.hi) * rr;
    return std::exp(-0.5 * u * u);
  };
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    const double center = 2.0 * xr::pi.hi * k;
    terms.push_back(integrate(gauss_window, center - d, center + d, 1e-18));
  }
  const double lhs2 = comp_sum(terms).to_double();
  const double rhs2 =
      (exp(-mul_pwr2(pim_xr * pim_xr * r2, 0.5)) / (pim_xr * r2)).to_double();

  return {lhs1 > rhs1, lhs2 < rhs2};
}

BoundPair certified_bounds(const BoundParams& p) {
  return {lower_bound_general(p), upper_bound_general(p.delta, p.r, p.n)};
}

}  // namespace gshannon
