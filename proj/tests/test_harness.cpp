#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "gshannon/errors.hpp"
#include "gshannon/harness.hpp"

using namespace gshannon;

namespace {

const Bandwidth kQuarterPi(M_PI / 4);
const MillsEpsilon kSeventh(1.0 / 7.0);

bool rel_eq(double value, double reference, double tol) {
  return std::fabs(value - reference) <= tol * std::fabs(reference);
}

// The printed reference table (5 significant digits per column).
const std::vector<ErrorRow> kPrintedTable = {
    {7, 7.5816e-07, 1.6125e-05, 1.3637e-04},  {9, 5.6056e-08, 1.0218e-06, 1.0754e-05},
    {11, 4.4118e-09, 7.1272e-08, 8.8497e-07}, {13, 3.5746e-10, 5.2752e-09, 7.4813e-08},
    {15, 2.9493e-11, 4.0037e-10, 6.4423e-09}, {17, 2.4661e-12, 3.1085e-11, 5.6227e-10},
    {19, 2.0841e-13, 2.4961e-12, 4.9577e-11}, {21, 1.7768e-14, 2.0497e-13, 4.4065e-12},
    {23, 1.5261e-15, 1.6963e-14, 3.9420e-13}, {25, 1.3193e-16, 1.4843e-15, 3.5451e-14},
};

}  // namespace

TEST_CASE("measure_error reproduces the frozen extended-precision values") {
  // Frozen from a 60-digit evaluation of the same pipeline (double samples,
  // double grid points, optimal double width, exact arithmetic in between).
  CHECK(rel_eq(measure_error(kQuarterPi, 7, optimal_width(kQuarterPi, 7), 99),
               1.6137945681818266e-05, 1e-10));
  CHECK(rel_eq(measure_error(kQuarterPi, 13, optimal_width(kQuarterPi, 13), 99),
               5.2793065917588916e-09, 1e-10));
  CHECK(rel_eq(measure_error(kQuarterPi, 25, optimal_width(kQuarterPi, 25), 99),
               1.4224256886205563e-15, 1e-9));
}

TEST_CASE("measure_error grid behavior and domain") {
  const GaussWidth r = optimal_width(kQuarterPi, 7);
  const double midpoint_only = measure_error(kQuarterPi, 7, r, 1);
  const double full_grid = measure_error(kQuarterPi, 7, r, 99);
  CHECK(midpoint_only <= full_grid * (1.0 + 1e-15));
  CHECK_THROWS_AS(measure_error(kQuarterPi, 1, r, 99), std::domain_error);
  CHECK_THROWS_AS(measure_error(kQuarterPi, 7, r, 0), std::domain_error);
}

TEST_CASE("repro_table") {
  const ExperimentConfig config{kQuarterPi, kSeventh, {7, 9, 11}, 99};
  const auto rows = repro_table(config);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.lower == lower_bound_opt(kQuarterPi, kSeventh, row.n));
    CHECK(row.measured ==
          measure_error(kQuarterPi, row.n, optimal_width(kQuarterPi, row.n), 99));
    CHECK(row.upper == upper_bound_opt(kQuarterPi, row.n));
    CHECK(row.lower < row.measured);
    CHECK(row.measured < row.upper);
  }

  // Rows are independent: a single-n run matches the full-table row.
  const auto single = repro_table({kQuarterPi, kSeventh, {9}, 99});
  REQUIRE(single.size() == 1);
  CHECK(single[0].lower == rows[1].lower);
  CHECK(single[0].measured == rows[1].measured);
  CHECK(single[0].upper == rows[1].upper);

  CHECK_THROWS_AS(repro_table({kQuarterPi, kSeventh, {5, 7, 9}, 99}), CertificateError);
  CHECK_THROWS_AS(repro_table({kQuarterPi, kSeventh, {9, 7}, 99}), std::domain_error);
  CHECK_THROWS_AS(repro_table({kQuarterPi, kSeventh, {}, 99}), std::domain_error);
  CHECK_THROWS_AS(repro_table({kQuarterPi, kSeventh, {7}, 0}), std::domain_error);
}

TEST_CASE("grid refinement stability") {
  // The 99-point grid maximum is a stable proxy for the sup on (0,1): the
  // 999-point value moves it by far less than 5% on every table row.
  for (int n = 7; n <= 25; n += 2) {
    const GaussWidth r = optimal_width(kQuarterPi, n);
    const double coarse = measure_error(kQuarterPi, n, r, 99);
    const double fine = measure_error(kQuarterPi, n, r, 999);
    CHECK(std::fabs(fine - coarse) <= 0.05 * coarse);
  }
}

TEST_CASE("monotone decay of all three columns") {
  const auto rows = repro_table({kQuarterPi, kSeventh, {7, 9, 11, 13}, 99});
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i + 1].lower < rows[i].lower);
    CHECK(rows[i + 1].measured < rows[i].measured);
    CHECK(rows[i + 1].upper < rows[i].upper);
  }
}

TEST_CASE("rate_fit on the printed reference values") {
  std::vector<ErrorRow> tail(kPrintedTable.begin() + 4, kPrintedTable.end());  // n = 15..25
  // Frozen regression slopes of the printed columns.
  CHECK(rate_fit(tail, ErrorColumn::measured) == doctest::Approx(-1.250942).epsilon(1e-4));
  CHECK(rate_fit(tail, ErrorColumn::lower) == doctest::Approx(-1.231601).epsilon(1e-4));
  CHECK(rate_fit(tail, ErrorColumn::upper) == doctest::Approx(-1.210862).epsilon(1e-4));
  const double target = -(M_PI - kQuarterPi.delta) / 2.0;
  for (const auto col : {ErrorColumn::lower, ErrorColumn::measured, ErrorColumn::upper}) {
    CHECK(std::fabs(rate_fit(tail, col) - target) <= 0.1 * std::fabs(target));
  }
  // All three columns share the same exponential factor, so their slopes
  // agree with each other within 10%.
  const double s_lo = rate_fit(tail, ErrorColumn::lower);
  const double s_me = rate_fit(tail, ErrorColumn::measured);
  const double s_up = rate_fit(tail, ErrorColumn::upper);
  const double scale = std::fabs(s_me);
  CHECK(std::fabs(s_lo - s_me) <= 0.1 * scale);
  CHECK(std::fabs(s_up - s_me) <= 0.1 * scale);
  CHECK(std::fabs(s_lo - s_up) <= 0.1 * scale);
}

TEST_CASE("rate_fit degeneracies") {
  CHECK_THROWS_AS(rate_fit({}, ErrorColumn::lower), std::domain_error);
  CHECK_THROWS_AS(rate_fit({{7, 1e-3, 1e-3, 1e-3}, {9, 1e-4, 1e-4, 1e-4}}, ErrorColumn::lower),
                  std::domain_error);
  const std::vector<ErrorRow> constant = {
      {7, 1e-3, 1e-3, 1e-3}, {9, 1e-3, 1e-3, 1e-3}, {11, 1e-3, 1e-3, 1e-3}};
  CHECK_THROWS_AS(rate_fit(constant, ErrorColumn::measured), std::domain_error);
  const std::vector<ErrorRow> negative = {
      {7, -1e-3, 1e-3, 1e-3}, {9, 1e-4, 1e-3, 1e-3}, {11, 1e-5, 1e-3, 1e-3}};
  CHECK_THROWS_AS(rate_fit(negative, ErrorColumn::lower), std::domain_error);
}

TEST_CASE("emit_csv formats") {
  const std::string csv = emit_csv(kPrintedTable, false);
  CHECK(csv.rfind("n,lower,measured,upper\n", 0) == 0);
  const auto second_line_start = csv.find('\n') + 1;
  const auto second_line = csv.substr(second_line_start, csv.find('\n', second_line_start) -
                                                             second_line_start);
  CHECK(second_line == "7,7.5816e-07,1.6125e-05,1.3637e-04");

  CHECK(emit_csv({}, false) == "n,lower,measured,upper\n");

  // Natural logs of the printed n = 7 row, 6 decimals.
  const std::string log_csv = emit_csv({kPrintedTable[0]}, true);
  CHECK(log_csv == "n,lower,measured,upper\n7,-14.092371,-11.035140,-8.900139\n");
}
