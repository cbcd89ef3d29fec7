#include "gshannon/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gshannon/errors.hpp"

namespace gshannon {

namespace {

template <class Reconstruct>
double grid_max_error(Bandwidth delta, const SampleSet& samples, int grid_points,
                      Reconstruct&& reconstruct) {
  ExtendedReal worst(0.0);
  const double denom = grid_points + 1;
  for (int j = 1; j <= grid_points; ++j) {
    const double t = static_cast<double>(j) / denom;
    const ExtendedReal diff = f0_eval_xr(delta, t) - reconstruct(samples, t);
    const ExtendedReal mag = abs(diff);
    if (mag > worst) worst = mag;
  }
  return worst.to_double();
}

}  // namespace

double measure_error(Bandwidth delta, int n, GaussWidth r, int grid_points) {
  if (n < 2) throw std::domain_error("measure_error: n must be >= 2");
  if (grid_points < 1) throw std::domain_error("measure_error: grid_points must be >= 1");
  const SampleSet samples = f0_samples(delta, n);
  return grid_max_error(delta, samples, grid_points,
                        [r](const SampleSet& s, double t) { return reconstruct_gauss_xr(s, r, t); });
}

double measure_error_shannon(Bandwidth delta, int n, int grid_points) {
  if (n < 2) throw std::domain_error("measure_error_shannon: n must be >= 2");
  if (grid_points < 1) throw std::domain_error("measure_error_shannon: grid_points must be >= 1");
  const SampleSet samples = f0_samples(delta, n);
  return grid_max_error(delta, samples, grid_points,
                        [](const SampleSet& s, double t) { return reconstruct_shannon_xr(s, t); });
}

std::vector<ErrorRow> repro_table(const ExperimentConfig& config) {
  if (config.grid_points < 1) throw std::domain_error("repro_table: grid_points must be >= 1");
  if (config.n_list.empty()) throw std::domain_error("repro_table: empty n list");
  if (!std::is_sorted(config.n_list.begin(), config.n_list.end())) {
    throw std::domain_error("repro_table: n list must be sorted ascending");
  }

  // Certificate validity first: every n must be admissible and C positive.
  const int n_star = admissible_n_min(config.delta, config.eps);
  for (const int n : config.n_list) {
    if (n < n_star) {
      throw CertificateError("repro_table: n = " + std::to_string(n) +
                             " below the admissible minimum " + std::to_string(n_star));
    }
  }

  std::vector<ErrorRow> rows;
  rows.reserve(config.n_list.size());
  for (const int n : config.n_list) {
    const GaussWidth r = optimal_width(config.delta, n);
    rows.push_back({n, lower_bound_opt(config.delta, config.eps, n),
                    measure_error(config.delta, n, r, config.grid_points),
                    upper_bound_opt(config.delta, n)});
  }
  return rows;
}

double rate_fit(const std::vector<ErrorRow>& rows, ErrorColumn column) {
  if (rows.size() < 3) throw std::domain_error("rate_fit: need at least 3 rows");
  std::vector<double> xs, ys;
  xs.reserve(rows.size());
  ys.reserve(rows.size());
  for (const auto& row : rows) {
    const double v = column == ErrorColumn::lower      ? row.lower
                     : column == ErrorColumn::measured ? row.measured
                                                       : row.upper;
    if (!(v > 0.0)) throw std::domain_error("rate_fit: non-positive column value");
    xs.push_back(row.n);
    ys.push_back(std::log(v));
  }
  if (std::equal(ys.begin() + 1, ys.end(), ys.begin())) {
    throw std::domain_error("rate_fit: degenerate constant column");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw std::domain_error("rate_fit: degenerate n values");
  return sxy / sxx;
}

std::string emit_csv(const std::vector<ErrorRow>& rows, bool log_scale) {
  std::string out = "n,lower,measured,upper\n";
  char line[128];
  for (const auto& row : rows) {
    if (log_scale) {
      std::snprintf(line, sizeof line, "%d,%.6f,%.6f,%.6f\n", row.n, std::log(row.lower),
                    std::log(row.measured), std::log(row.upper));
    } else {
      std::snprintf(line, sizeof line, "%d,%.4e,%.4e,%.4e\n", row.n, row.lower, row.measured,
                    row.upper);
    }
    out += line;
  }
  return out;
}

}  // namespace gshannon
