#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "gshannon/extended_real.hpp"

namespace gshannon {

/// Angular band edge delta of a bandlimited signal, 0 < delta < pi
/// (integer-spaced samples oversample the signal).
struct Bandwidth {
  double delta;

  explicit Bandwidth(double d);
};

/// An evaluatable bandlimited function with its declared band edge and norm.
/// make_f0 builds the canonical unit-norm instance; user-supplied signals
/// plug into the same harness.
struct PWSignal {
  Bandwidth bandwidth;
  std::function<double(double)> evaluate;
  double declared_norm = 1.0;
};

/// The window of samples {(j, v_j) : j = -n+1, ..., n}, n >= 2.
class SampleSet {
 public:
  SampleSet(int n, std::vector<double> values);

  /// Validates and packs explicit (j, value) pairs; they must be exactly
  /// j = -n+1..n in increasing order.
  static SampleSet from_pairs(const std::vector<std::pair<long, double>>& pairs);

  int half_size() const { return n_; }
  long j_min() const { return -static_cast<long>(n_) + 1; }
  long j_max() const { return n_; }
  double value_at(long j) const { return values_[static_cast<std::size_t>(j - j_min())]; }
  std::span<const double> values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;  // values_[k] = v_{k - n + 1}
};

/// sin(pi x)/(pi x) with sinc(0) = 1; exactly 0 at nonzero integers.
double sinc(double x);
ExtendedReal sinc_xr(const ExtendedReal& x);

/// The canonical test signal: (1/sqrt(pi delta)) sin((t - 1/2) delta)/(t - 1/2),
/// continuously extended to sqrt(delta/pi) at t = 1/2.
double f0_eval(Bandwidth delta, double t);
ExtendedReal f0_eval_xr(Bandwidth delta, double t);

/// Samples of f0 at j = -n+1..n.  Throws std::domain_error for n < 2.
SampleSet f0_samples(Bandwidth delta, int n);

/// Modulus of the Fourier transform of f0: 1/sqrt(2 delta) on [-delta, delta],
/// 0 outside.
double f0_hat_abs(Bandwidth delta, double xi);

/// Trapezoid estimate of the L2 norm of `signal` over
/// [-half_width, half_width], accumulated with comp_sum.
double pw_norm_estimate(const PWSignal& signal, double half_width, double step);

PWSignal make_f0(Bandwidth delta);

/// Sample file format: one `j,value` line per sample in increasing j,
/// value printed with 17 significant digits; `#` lines are comments.
void write_samples(std::ostream& out, const SampleSet& samples);
SampleSet read_samples(std::istream& in);

}  // namespace gshannon
