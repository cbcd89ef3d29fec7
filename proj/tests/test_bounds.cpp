#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "gshannon/bounds.hpp"
#include "gshannon/errors.hpp"

using namespace gshannon;

namespace {

const Bandwidth kQuarterPi(M_PI / 4);
const MillsEpsilon kSeventh(1.0 / 7.0);

std::string sci5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

GaussWidth min_rule_width(Bandwidth d) { return optimal_width(d, 2); }  // 1/sqrt(pi - delta)

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(MillsEpsilon(0.0), std::domain_error);
  CHECK_THROWS_AS(MillsEpsilon(1.0), std::domain_error);
  CHECK_NOTHROW(MillsEpsilon(0.5));
  const BoundParams p{kQuarterPi, kSeventh, 25, optimal_width(kQuarterPi, 25)};
  CHECK(p.r_in_corridor());
  CHECK(p.corridor_min() == doctest::Approx(1.5341622).epsilon(1e-6));
  CHECK(p.corridor_max() == doctest::Approx(3.1915382).epsilon(1e-6));
}

TEST_CASE("c_const at the experiment parameters") {
  // Frozen from the extended-precision evaluation of the closed form.
  const double c7 = c_const(kQuarterPi, kSeventh, optimal_width(kQuarterPi, 7));
  CHECK(c7 == doctest::Approx(0.0666687041009863).epsilon(1e-12));

  double cmin = 1e300;
  for (int n = 7; n <= 200; ++n) {
    cmin = std::min(cmin, c_const(kQuarterPi, kSeventh, optimal_width(kQuarterPi, n)));
  }
  CHECK(cmin >= 0.0666687);
  CHECK(cmin <= 0.0666687 + 1e-6);
  CHECK(cmin == c7);  // c_const grows with n, so n = 7 is the minimizer
}

TEST_CASE("c_const sign structure over the bandwidth range") {
  const MillsEpsilon e20(1.0 / 20.0);
  for (int i = 0; i < 200; ++i) {
    const double d = M_PI / 200 + (0.49 * M_PI - M_PI / 200) * i / 199.0;
    const Bandwidth delta(d);
    CHECK(c_const(delta, e20, min_rule_width(delta)) > 0.0);
  }
  const Bandwidth tiny(M_PI / 1000);
  CHECK(c_const(tiny, e20, min_rule_width(tiny)) < 0.0);
  const Bandwidth wide(0.499999 * M_PI);
  CHECK(c_const(wide, e20, min_rule_width(wide)) < 0.0);
}

TEST_CASE("n_min") {
  CHECK(n_min(kQuarterPi, kSeventh, 0.0666687) == 7);
  CHECK(n_min(kQuarterPi, kSeventh, 1000.0) == 7);  // second term dominates
  CHECK(n_min(Bandwidth(3.0), MillsEpsilon(0.99), 1000.0) == 11);
  CHECK(n_min(kQuarterPi, MillsEpsilon(1.0 / 20.0), 0.0666687) == 18);
  CHECK_THROWS_AS(n_min(kQuarterPi, kSeventh, 0.0), std::domain_error);
  CHECK_THROWS_AS(n_min(kQuarterPi, kSeventh, -1.0), std::domain_error);
  CHECK(admissible_n_min(kQuarterPi, kSeventh) == 7);
  CHECK(c_certificate(kQuarterPi, kSeventh) ==
        c_const(kQuarterPi, kSeventh, optimal_width(kQuarterPi, 7)));
}

TEST_CASE("lower_bound_opt matches the tabulated digits") {
  CHECK(sci5(lower_bound_opt(kQuarterPi, kSeventh, 7)) == "7.5816e-07");
  CHECK(sci5(lower_bound_opt(kQuarterPi, kSeventh, 15)) == "2.9493e-11");
  CHECK(sci5(lower_bound_opt(kQuarterPi, kSeventh, 25)) == "1.3193e-16");
  CHECK_THROWS_AS(lower_bound_opt(kQuarterPi, kSeventh, 5), CertificateError);
  CHECK_THROWS_AS(lower_bound_opt(Bandwidth(2.0), kSeventh, 100), CertificateError);
}

TEST_CASE("lower_bound_general") {
  // At n = n* the general bound evaluated at the optimal width coincides with
  // the optimal-width form (identical certificate constant).
  const BoundParams p7{kQuarterPi, kSeventh, 7, optimal_width(kQuarterPi, 7)};
  const double general7 = lower_bound_general(p7);
  const double opt7 = lower_bound_opt(kQuarterPi, kSeventh, 7);
  CHECK(std::fabs(general7 - opt7) <= 1e-12 * opt7);

  // At larger n the general bound uses C at that r; it still reproduces the
  // tabulated digits at n = 25, and exceeds the uniform-constant bound by at
  // most the C(n)/C(7) ratio.
  const BoundParams p25{kQuarterPi, kSeventh, 25, optimal_width(kQuarterPi, 25)};
  const double general25 = lower_bound_general(p25);
  CHECK(sci5(general25) == "1.3193e-16");
  const double opt25 = lower_bound_opt(kQuarterPi, kSeventh, 25);
  CHECK(general25 >= opt25);
  CHECK(general25 <= opt25 * (1.0 + 1e-5));

  // The certified floor shrinks monotonically toward the right corridor end:
  // at 0.9 r_opt the bound sits far above its value at r_opt.
  const BoundParams p90{kQuarterPi, kSeventh, 25,
                        GaussWidth(0.9 * optimal_width(kQuarterPi, 25).r)};
  CHECK(lower_bound_general(p90) > general25);

  // Corridor violations are certificate errors, boundaries included.
  const double floor = p25.corridor_min();
  CHECK_NOTHROW(lower_bound_general({kQuarterPi, kSeventh, 25, GaussWidth(floor)}));
  CHECK_THROWS_AS(lower_bound_general({kQuarterPi, kSeventh, 25, GaussWidth(floor * (1 - 1e-9))}),
                  CertificateError);
  CHECK_THROWS_AS(
      lower_bound_general({kQuarterPi, kSeventh, 25,
                           GaussWidth(optimal_width(kQuarterPi, 25).r * (1 + 1e-9))}),
      CertificateError);
  CHECK_THROWS_AS(lower_bound_general({Bandwidth(1.6), kSeventh, 25, GaussWidth(2.0)}),
                  CertificateError);
}

TEST_CASE("upper bounds") {
  CHECK(sci5(upper_bound_opt(kQuarterPi, 7)) == "1.3637e-04");
  CHECK(sci5(upper_bound_opt(kQuarterPi, 17)) == "5.6227e-10");
  CHECK(sci5(upper_bound_opt(kQuarterPi, 25)) == "3.5451e-14");
  CHECK_THROWS_AS(upper_bound_opt(kQuarterPi, 1), std::domain_error);

  // The optimal-width form majorizes the general form evaluated at the
  // optimal width, with slack below 1e-5 relative.
  for (const int n : {7, 13, 25}) {
    const GaussWidth r = optimal_width(kQuarterPi, n);
    const double general = upper_bound_general(kQuarterPi, r, n);
    const double opt = upper_bound_opt(kQuarterPi, n);
    CHECK(general <= opt);
    CHECK(general >= opt * (1.0 - 1e-5));
  }

  // Crossover: the regularization term dominates at the optimal width, the
  // truncation tail dominates once r grows at fixed n.
  const int n = 7;
  const GaussWidth r_opt = optimal_width(kQuarterPi, n);
  CHECK(upper_bound_general(kQuarterPi, r_opt, n) - e2_tail_bound(kQuarterPi, r_opt, n) >
        e2_tail_bound(kQuarterPi, r_opt, n));
  const GaussWidth r_big(10.0);
  CHECK(e2_tail_bound(kQuarterPi, r_big, n) >
        upper_bound_general(kQuarterPi, r_big, n) - e2_tail_bound(kQuarterPi, r_big, n));
}

TEST_CASE("e2_tail_bound") {
  const GaussWidth r7 = optimal_width(kQuarterPi, 7);
  const double direct = r7.r * std::exp(-36.0 / (2.0 * r7.r * r7.r)) / (M_PI * 7.0 * std::sqrt(6.0));
  CHECK(e2_tail_bound(kQuarterPi, r7, 7) == doctest::Approx(direct).epsilon(1e-13));

  const GaussWidth two(2.0);
  for (int n = 2; n < 60; ++n) {
    CHECK(e2_tail_bound(kQuarterPi, two, n + 1) < e2_tail_bound(kQuarterPi, two, n));
  }
  for (int n = 2; n <= 100; ++n) {
    CHECK(e2_tail_bound(kQuarterPi, optimal_width(kQuarterPi, n), n) <
          upper_bound_opt(kQuarterPi, n));
  }
  CHECK_THROWS_AS(e2_tail_bound(kQuarterPi, two, 1), std::domain_error);
}

TEST_CASE("bound decay in n") {
  for (int n = 7; n <= 60; n += 2) {
    CHECK(lower_bound_opt(kQuarterPi, kSeventh, n + 2) < lower_bound_opt(kQuarterPi, kSeventh, n));
    CHECK(upper_bound_opt(kQuarterPi, n + 2) < upper_bound_opt(kQuarterPi, n));
  }
}

TEST_CASE("asymptotic decay rate of the upper bound") {
  const double target = (M_PI - kQuarterPi.delta) / 2.0;
  const double slope =
      std::log(upper_bound_opt(kQuarterPi, 50) / upper_bound_opt(kQuarterPi, 52)) / 2.0;
  CHECK(std::fabs(slope - target) <= 0.05 * target);
}

TEST_CASE("lemma checkers") {
  const GaussWidth r7 = optimal_width(kQuarterPi, 7);
  const LemmaChecks checks = lemma_checks(kQuarterPi, kSeventh, r7, 100);
  CHECK(checks.lemma1_ok);
  CHECK(checks.lemma2_ok);

  // Insensitive to the series cut once the terms underflow.
  const LemmaChecks k50 = lemma_checks(kQuarterPi, kSeventh, r7, 50);
  const LemmaChecks k500 = lemma_checks(kQuarterPi, kSeventh, r7, 500);
  CHECK(k50.lemma1_ok == k500.lemma1_ok);
  CHECK(k50.lemma2_ok == k500.lemma2_ok);

  CHECK_THROWS_AS(lemma_checks(kQuarterPi, kSeventh, GaussWidth(1.0), 100), std::domain_error);
  CHECK_THROWS_AS(lemma_checks(kQuarterPi, kSeventh, r7, 49), std::domain_error);
}

TEST_CASE("certified_bounds bundles both sides") {
  const BoundParams p{kQuarterPi, kSeventh, 11, optimal_width(kQuarterPi, 11)};
  const BoundPair pair = certified_bounds(p);
  CHECK(pair.lower > 0.0);
  CHECK(pair.lower <= pair.upper);
}
