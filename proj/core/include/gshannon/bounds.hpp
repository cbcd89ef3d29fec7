#pragma once

#include "gshannon/reconstruct.hpp"
#include "gshannon/signals.hpp"

namespace gshannon {

/// Slack parameter of the sharpened Mills lower bound, 0 < eps < 1.
struct MillsEpsilon {
  double eps;

  explicit MillsEpsilon(double e);
};

/// Parameter quadruple for the certified bounds.  The lower bound requires
/// delta < pi/2 and r inside the corridor
/// 2/(sqrt(eps(2+eps))(pi-delta)) <= r <= sqrt((n-1)/(pi-delta)),
/// both ends inclusive.
struct BoundParams {
  Bandwidth delta;
  MillsEpsilon eps;
  int n;
  GaussWidth r;

  double corridor_min() const;
  double corridor_max() const;
  bool r_in_corridor() const;
};

/// Certified lower and upper bounds on the worst-case sup error over
/// unit-norm signals and t in (0,1).
struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

struct LemmaChecks {
  bool lemma1_ok = false;
  bool lemma2_ok = false;
};

/// The constant C_{r,delta,eps} =
///   sin(delta/2) [ 4/((2+eps)(pi+delta)delta)
///                  (2/((2+eps)(pi-delta)) - e^{-2 pi delta r^2}/(pi+delta))
///                  - 2/((2pi-delta)(pi-delta)^2) ].
/// May be negative; a positive value is what certifies the lower bound.
double c_const(Bandwidth delta, MillsEpsilon eps, GaussWidth r);

/// Admissibility rule for the lower-bound certificate at constant c_value:
/// max{2, ceil(4/(eps(2+eps)(pi-delta)) + 1),
///        ceil(8/(pi c^2 (pi-delta)^5) - 1)}.
/// Throws std::domain_error for c_value <= 0 (certificate void).
long long n_min(Bandwidth delta, MillsEpsilon eps, double c_value);

/// Smallest n whose optimal-width certificate is self-consistent:
/// C(n) > 0 and n >= n_min(delta, eps, C(n)).  Throws CertificateError when
/// no such n exists (e.g. delta too close to 0 or pi/2).
int admissible_n_min(Bandwidth delta, MillsEpsilon eps);

/// The n-uniform certificate constant: c_const at the optimal width of
/// admissible_n_min.  c_const grows with n, so this value certifies every
/// admissible n, and it is the constant the tabulated lower bound uses.
double c_certificate(Bandwidth delta, MillsEpsilon eps);

/// Lower bound at arbitrary corridor width r:
/// (1/(pi sqrt(2 delta))) [ C e^{-(pi-delta)^2 r^2/2}/r^3
///   - 2 sqrt(2) r^2 e^{-(n-1)^2/(2r^2)} / (n(n+1/2)(n-1) sqrt(pi)) ].
/// Throws CertificateError when the preconditions fail; the returned value
/// may still be negative (certificate uninformative but honest).
double lower_bound_general(const BoundParams& p);

/// Lower bound at the optimal width, using the n-uniform certificate
/// constant:
/// [C (pi-d)^{3/2} - (2 sqrt2/((pi-d) sqrt pi)) (n-1)^{3/2}/(n(n+1/2))]
///   e^{-(pi-d)(n-1)/2} / (pi sqrt(2d) (n-1)^{3/2}).
double lower_bound_opt(Bandwidth delta, MillsEpsilon eps, int n);

/// Upper bound at arbitrary width r (total for n >= 2, r > 0, 0 < delta < pi).
double upper_bound_general(Bandwidth delta, GaussWidth r, int n);

/// Upper bound at the optimal width:
/// (sqrt(2d) + sqrt(n-1)/n + (1+(1+1/(6pi))e^{-4pi})/sqrt(2(n-1)))
///   e^{-(pi-d)(n-1)/2} / (pi sqrt((pi-d)(n-1))).
double upper_bound_opt(Bandwidth delta, int n);

/// Truncation-tail component of the upper bound:
/// r e^{-(n-1)^2/(2r^2)} / (pi n sqrt(n-1)).
double e2_tail_bound(Bandwidth delta, GaussWidth r, int n);

/// Numeric inequality checkers for the two quadrature lemmas behind the
/// lower bound.  k_max >= 50 terms of the lemma-2 series are summed (terms
/// beyond the first few underflow).  Preconditions (corridor floor, positive
/// bracket) are reported as std::domain_error; quadrature failure surfaces
/// as QuadratureError.
LemmaChecks lemma_checks(Bandwidth delta, MillsEpsilon eps, GaussWidth r, int k_max);

/// Both general bounds at the given parameters (validates the lower side).
BoundPair certified_bounds(const BoundParams& p);

}  // namespace gshannon
