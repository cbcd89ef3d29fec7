#pragma once

#include <string>
#include <vector>

#include "gshannon/bounds.hpp"
#include "gshannon/reconstruct.hpp"
#include "gshannon/signals.hpp"

namespace gshannon {

/// One experiment record: certified lower bound, measured grid error at the
/// optimal width, certified upper bound.
struct ErrorRow {
  int n = 0;
  double lower = 0.0;
  double measured = 0.0;
  double upper = 0.0;
};

enum class ErrorColumn { lower, measured, upper };

struct ExperimentConfig {
  Bandwidth delta;
  MillsEpsilon eps;
  std::vector<int> n_list;
  int grid_points = 99;
};

/// max over t_j = j/(grid_points+1), j = 1..grid_points, of
/// |f0(t_j) - (S_{n,r} f0)(t_j)|, the difference formed in extended
/// precision before taking the absolute value.
double measure_error(Bandwidth delta, int n, GaussWidth r, int grid_points);

/// Same grid maximum for the unwindowed truncated sinc series (baseline).
double measure_error_shannon(Bandwidth delta, int n, int grid_points);

/// One ErrorRow per n at r = optimal_width(delta, n); the lower-bound
/// certificate (C > 0, n admissible) is checked before any row is computed.
std::vector<ErrorRow> repro_table(const ExperimentConfig& config);

/// Least-squares slope of ln(column) against n.  Throws std::domain_error on
/// fewer than 3 rows, non-positive values, or a degenerate (constant) column.
double rate_fit(const std::vector<ErrorRow>& rows, ErrorColumn column);

/// CSV serialization: header `n,lower,measured,upper`; 5-significant-digit
/// scientific values, or natural logs with 6 decimals when log_scale is set.
std::string emit_csv(const std::vector<ErrorRow>& rows, bool log_scale);

}  // namespace gshannon
