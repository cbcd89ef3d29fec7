#pragma once

#include "gshannon/extended_real.hpp"
#include "gshannon/signals.hpp"

namespace gshannon {

/// Width of the Gaussian window e^{-(t-j)^2 / (2 r^2)}, r > 0.
struct GaussWidth {
  double r;

  explicit GaussWidth(double width);
};

/// The width that balances regularization and truncation error:
/// r = sqrt((n-1)/(pi - delta)).  Throws std::domain_error for n < 2.
GaussWidth optimal_width(Bandwidth delta, int n);

/// sinc(t-j) e^{-(t-j)^2/(2r^2)}.  The Gaussian factor flushes to zero for
/// far nodes; those terms are below any representable contribution.
double gauss_kernel(double t, long j, GaussWidth r);
ExtendedReal gauss_kernel_xr(double t, long j, GaussWidth r);

/// Windowed reconstruction sum_j v_j sinc(t-j) e^{-(t-j)^2/(2r^2)}, terms in
/// increasing j, accumulated with comp_sum and rounded once at the end.
double reconstruct_gauss(const SampleSet& samples, GaussWidth r, double t);

/// Same operator with every term evaluated in extended precision; this is the
/// evaluation path the experiment harness differences against f0.
ExtendedReal reconstruct_gauss_xr(const SampleSet& samples, GaussWidth r, double t);

/// Plain truncated sinc series (no window): the slowly converging baseline.
double reconstruct_shannon(const SampleSet& samples, double t);
ExtendedReal reconstruct_shannon_xr(const SampleSet& samples, double t);

}  // namespace gshannon
