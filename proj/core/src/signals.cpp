#include "gshannon/signals.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gshannon {

Bandwidth::Bandwidth(double d) : delta(d) {
  if (!(d > 0.0) || !(d < xr::pi.hi)) {
    throw std::domain_error("Bandwidth: delta must lie in (0, pi)");
  }
}

SampleSet::SampleSet(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (n_ < 2) throw std::domain_error("SampleSet: n must be >= 2");
  if (values_.size() != static_cast<std::size_t>(2 * n_)) {
    throw std::domain_error("SampleSet: expected exactly 2n values");
  }
}

SampleSet SampleSet::from_pairs(const std::vector<std::pair<long, double>>& pairs) {
  if (pairs.size() < 4 || pairs.size() % 2 != 0) {
    throw std::domain_error("SampleSet: expected 2n pairs with n >= 2");
  }
  const int n = static_cast<int>(pairs.size() / 2);
  std::vector<double> values;
  values.reserve(pairs.size());
  long expected = -static_cast<long>(n) + 1;
  for (const auto& [j, v] : pairs) {
    if (j != expected) {
      throw std::domain_error("SampleSet: indices must be exactly -n+1..n in increasing order");
    }
    values.push_back(v);
    ++expected;
  }
  return SampleSet(n, std::move(values));
}

namespace {

// Below this the removable singularities use the degree-2 Taylor branch.
constexpr double kTaylorCut = 1e-8;

}  // namespace

double sinc(double x) { return sinc_xr(ExtendedReal(x)).to_double(); }

ExtendedReal sinc_xr(const ExtendedReal& x) {
  if (std::abs(x.hi) < kTaylorCut) {
    const ExtendedReal px = xr::pi * x;
    return 1.0 - (px * px) / 6.0;
  }
  if (x.lo == 0.0 && x.hi == std::nearbyint(x.hi)) {
    return ExtendedReal(0.0);  // sin(pi k) = 0 exactly
  }
  const ExtendedReal px = xr::pi * x;
  return sin(px) / px;
}

double f0_eval(Bandwidth delta, double t) { return f0_eval_xr(delta, t).to_double(); }

ExtendedReal f0_eval_xr(Bandwidth delta, double t) {
  if (!std::isfinite(t)) throw std::domain_error("f0_eval: non-finite t");
  const ExtendedReal u = two_sum(t, -0.5);
  const ExtendedReal amplitude = 1.0 / sqrt(xr::pi * delta.delta);
  if (std::abs(u.hi) < kTaylorCut) {
    const ExtendedReal ud = u * delta.delta;
    return amplitude * delta.delta * (1.0 - (ud * ud) / 6.0);
  }
  return amplitude * (sin(u * delta.delta) / u);
}

SampleSet f0_samples(Bandwidth delta, int n) {
  if (n < 2) throw std::domain_error("f0_samples: n must be >= 2");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(2 * n));
  for (long j = -static_cast<long>(n) + 1; j <= n; ++j) {
    values.push_back(f0_eval(delta, static_cast<double>(j)));
  }
  return SampleSet(n, std::move(values));
}

double f0_hat_abs(Bandwidth delta, double xi) {
  if (!std::isfinite(xi)) throw std::domain_error("f0_hat_abs: non-finite xi");
  if (std::abs(xi) > delta.delta) return 0.0;
  return 1.0 / std::sqrt(2.0 * delta.delta);
}

double pw_norm_estimate(const PWSignal& signal, double half_width, double step) {
  if (!(half_width > 0.0) || !(step > 0.0)) {
    throw std::domain_error("pw_norm_estimate: half_width and step must be positive");
  }
  const auto points = static_cast<std::size_t>(std::llround(2.0 * half_width / step)) + 1;
  std::vector<double> terms;
  terms.reserve(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double t = -half_width + static_cast<double>(k) * step;
    const double v = signal.evaluate(t);
    const double w = (k == 0 || k + 1 == points) ? 0.5 : 1.0;
    terms.push_back(w * v * v);
  }
  const ExtendedReal sum = comp_sum(terms);
  return std::sqrt((sum * step).to_double());
}

PWSignal make_f0(Bandwidth delta) {
  return {delta, [delta](double t) { return f0_eval(delta, t); }, 1.0};
}

void write_samples(std::ostream& out, const SampleSet& samples) {
  char line[64];
  for (long j = samples.j_min(); j <= samples.j_max(); ++j) {
    std::snprintf(line, sizeof line, "%ld,%.16e\n", j, samples.value_at(j));
    out << line;
  }
  if (!out) throw std::runtime_error("write_samples: stream failure");
}

SampleSet read_samples(std::istream& in) {
  std::vector<std::pair<long, double>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("read_samples: line " + std::to_string(lineno) + ": expected j,value");
    }
    try {
      const long j = std::stol(line.substr(0, comma));
      const double v = std::stod(line.substr(comma + 1));
      pairs.emplace_back(j, v);
    } catch (const std::exception&) {
      throw std::runtime_error("read_samples: line " + std::to_string(lineno) + ": malformed entry");
    }
  }
  if (pairs.empty()) throw std::runtime_error("read_samples: no samples found");
  try {
    return SampleSet::from_pairs(pairs);
  } catch (const std::domain_error& e) {
    throw std::runtime_error(std::string("read_samples: ") + e.what());
  }
}

}  // namespace gshannon
