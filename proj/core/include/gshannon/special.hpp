#pragma once

#include "gshannon/extended_real.hpp"

namespace gshannon {

/// The three closed-form bounds on the Gaussian tail integral at x > 0:
///   lower       e^{-x^2} / (x + sqrt(x^2 + 2))
///   upper       e^{-x^2} / (x + sqrt(x^2 + 4/pi))
///   crude_upper e^{-x^2} / (2x)
/// with lower <= tail <= upper <= crude_upper.
struct MillsTriple {
  double lower = 0.0;
  double upper = 0.0;
  double crude_upper = 0.0;
};

/// integral_x^inf e^{-tau^2} dtau, extended-precision result.
/// Series below the crossover x = 2, continued fraction above; negative x via
/// the reflection tail(x) = sqrt(pi) - tail(-x).  Returns 0 for x >= 40.
ExtendedReal gauss_tail_xr(double x);

/// Nearest-double value of gauss_tail_xr.  Monotone non-increasing.
double gauss_tail(double x);

/// Throws std::domain_error for x <= 0 or non-finite x.
MillsTriple mills_bounds(double x);

/// Smallest x for which eps_lower is a certified lower bound on the tail.
double eps_lower_threshold(double eps);

/// e^{-x^2} / ((2+eps) x), strictly below gauss_tail(x) for
/// x >= eps_lower_threshold(eps).  Throws std::domain_error when eps is
/// outside (0,1] or x is below the threshold (the inequality is unproven
/// there, so the value is refused rather than returned).
double eps_lower(double x, double eps);

}  // namespace gshannon
