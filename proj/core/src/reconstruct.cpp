#include "gshannon/reconstruct.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gshannon {

GaussWidth::GaussWidth(double width) : r(width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw std::domain_error("GaussWidth: r must be positive and finite");
  }
}

GaussWidth optimal_width(Bandwidth delta, int n) {
  if (n < 2) throw std::domain_error("optimal_width: n must be >= 2");
  const ExtendedReal r2 = static_cast<double>(n - 1) / (xr::pi - delta.delta);
  return GaussWidth(sqrt(r2).to_double());
}

double gauss_kernel(double t, long j, GaussWidth r) {
  const double x = t - static_cast<double>(j);
  return sinc(x) * std::exp(-x * x / (2.0 * r.r * r.r));
}

ExtendedReal gauss_kernel_xr(double t, long j, GaussWidth r) {
  const ExtendedReal x = two_sum(t, -static_cast<double>(j));
  const ExtendedReal two_r2 = mul_pwr2(two_prod(r.r, r.r), 2.0);
  return sinc_xr(x) * exp(-(x * x) / two_r2);
}

double reconstruct_gauss(const SampleSet& samples, GaussWidth r, double t) {
  std::vector<double> terms;
  terms.reserve(samples.values().size());
  for (long j = samples.j_min(); j <= samples.j_max(); ++j) {
    terms.push_back(samples.value_at(j) * gauss_kernel(t, j, r));
  }
  return comp_sum(terms).to_double();
}

ExtendedReal reconstruct_gauss_xr(const SampleSet& samples, GaussWidth r, double t) {
  ExtendedReal acc;
  for (long j = samples.j_min(); j <= samples.j_max(); ++j) {
    acc += gauss_kernel_xr(t, j, r) * samples.value_at(j);
  }
  return acc;
}

double reconstruct_shannon(const SampleSet& samples, double t) {
  std::vector<double> terms;
  terms.reserve(samples.values().size());
  for (long j = samples.j_min(); j <= samples.j_max(); ++j) {
    terms.push_back(samples.value_at(j) * sinc(t - static_cast<double>(j)));
  }
  return comp_sum(terms).to_double();
}

ExtendedReal reconstruct_shannon_xr(const SampleSet& samples, double t) {
  ExtendedReal acc;
  for (long j = samples.j_min(); j <= samples.j_max(); ++j) {
    acc += sinc_xr(two_sum(t, -static_cast<double>(j))) * samples.value_at(j);
  }
  return acc;
}

}  // namespace gshannon
