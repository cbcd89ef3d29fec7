#pragma once

#include <cmath>
#include <cstddef>

#include "gshannon/errors.hpp"

namespace gshannon {

namespace detail {

// Gauss-Kronrod 7/15 pair on [-1,1] (QUADPACK dqk15 constants).
inline constexpr double gk15_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double gk15_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double gk15_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct GkEstimate {
  double integral;
  double error;
};

template <class F>
GkEstimate gk15(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_mid = f(mid);
  double kronrod = gk15_wk[7] * f_mid;
  double gauss = gk15_wg[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * gk15_nodes[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    kronrod += gk15_wk[i] * fsum;
    if (i % 2 == 1) gauss += gk15_wg[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute tolerance
/// abs_tol.  Deterministic: bisection, left interval first, results combined
/// in completion order.  Throws QuadratureError when the subdivision budget
/// is exhausted.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-18,
                 std::size_t max_intervals = 1'000'000) {
  struct Worker {
    F& f;
    double tol_per_len;
    std::size_t used = 0;
    std::size_t budget;

    double run(double lo, double hi) {
      const auto est = detail::gk15(f, lo, hi);
      if (est.error <= tol_per_len * (hi - lo) ||
          est.error <= 1e-16 * std::abs(est.integral)) {
        return est.integral;
      }
      if (++used > budget) {
        throw QuadratureError("integrate: subdivision budget exhausted");
      }
      const double mid = 0.5 * (lo + hi);
      return run(lo, mid) + run(mid, hi);
    }
  };
  if (!(a < b)) {
    if (a == b) return 0.0;
    return -integrate(f, b, a, abs_tol, max_intervals);
  }
  Worker w{f, abs_tol / (b - a), 0, max_intervals};
  return w.run(a, b);
}

}  // namespace gshannon
