#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gshannon/bounds.hpp"
#include "gshannon/errors.hpp"
#include "gshannon/harness.hpp"
#include "gshannon/reconstruct.hpp"
#include "gshannon/signals.hpp"

namespace gshannon::cli {

namespace {

double parse_decimal(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
  return v;
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace

double parse_real_literal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string::npos) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text);
    return parse_decimal(text.substr(0, slash)) / parse_decimal(text.substr(slash + 1));
  }
  const std::string before = text.substr(0, pi_pos);
  std::string after = text.substr(pi_pos + 2);
  const double coef = before.empty() ? 1.0 : parse_decimal(before);
  double denom = 1.0;
  if (!after.empty()) {
    if (after[0] != '/') throw std::invalid_argument("expected '/' after pi in '" + text + "'");
    denom = parse_decimal(after.substr(1));
  }
  return coef * M_PI / denom;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  if (text.find(':') != std::string::npos) {
    std::istringstream in(text);
    std::string a, b, c;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c)) {
      throw std::invalid_argument("expected start:step:stop in '" + text + "'");
    }
    const int start = std::stoi(a), step = std::stoi(b), stop = std::stoi(c);
    if (step <= 0) throw std::invalid_argument("step must be positive in '" + text + "'");
    for (int v = start; v <= stop; v += step) values.push_back(v);
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(std::stoi(item));
  }
  if (values.empty()) throw std::invalid_argument("empty list '" + text + "'");
  return values;
}

std::vector<double> parse_real_grid(const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    std::istringstream in(text);
    std::string a, b, c;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c)) {
      throw std::invalid_argument("expected start:step:stop in '" + text + "'");
    }
    const double start = parse_real_literal(a);
    const double step = parse_real_literal(b);
    const double stop = parse_real_literal(c);
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive in '" + text + "'");
    for (double v = start; v <= stop + 0.5 * step; v += step) values.push_back(v);
    if (!values.empty() && values.back() > stop) values.pop_back();
  } else {
    values.push_back(parse_real_literal(text));
  }
  if (values.empty()) throw std::invalid_argument("empty grid '" + text + "'");
  return values;
}

namespace {

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("write failure on '" + path + "'");
}

GaussWidth resolve_width(const std::string& r_text, bool opt_r, Bandwidth delta, int n) {
  if (opt_r) return optimal_width(delta, n);
  return GaussWidth(parse_real_literal(r_text));
}

int run_repro_table(const std::string& delta_text, const std::string& eps_text,
                    const std::string& n_list_text, int grid, const std::string& out_path,
                    bool log_scale, std::ostream& out) {
  const ExperimentConfig config{Bandwidth(parse_real_literal(delta_text)),
                                MillsEpsilon(parse_real_literal(eps_text)),
                                parse_int_list(n_list_text), grid};
  const auto rows = repro_table(config);
  write_text(out_path, emit_csv(rows, log_scale), out);
  return kExitOk;
}

int run_bounds(const std::string& delta_text, const std::string& eps_text, int n,
               const std::string& r_text, bool opt_r, std::ostream& out) {
  const Bandwidth delta(parse_real_literal(delta_text));
  const MillsEpsilon eps(parse_real_literal(eps_text));
  const GaussWidth r = resolve_width(r_text, opt_r, delta, n);

  double lower, upper;
  if (opt_r) {
    lower = lower_bound_opt(delta, eps, n);
    upper = upper_bound_opt(delta, n);
  } else {
    const BoundPair pair = certified_bounds({delta, eps, n, r});
    lower = pair.lower;
    upper = pair.upper;
  }
  const double c = c_const(delta, eps, r);

  char line[96];
  std::snprintf(line, sizeof line, "lower = %.10e\n", lower);
  out << line;
  std::snprintf(line, sizeof line, "upper = %.10e\n", upper);
  out << line;
  std::snprintf(line, sizeof line, "C = %.10e\n", c);
  out << line;
  std::snprintf(line, sizeof line, "n_min = %lld\n", n_min(delta, eps, c));
  out << line;
  return kExitOk;
}

int run_reconstruct(const std::string& delta_text, int n, const std::string& r_text, bool opt_r,
                    const std::string& samples_path, const std::string& at_text,
                    std::ostream& out) {
  const Bandwidth delta(parse_real_literal(delta_text));
  const GaussWidth r = resolve_width(r_text, opt_r, delta, n);

  std::optional<SampleSet> samples;
  if (!samples_path.empty()) {
    std::ifstream file(samples_path);
    if (!file) throw IoError("cannot open '" + samples_path + "'");
    try {
      samples.emplace(read_samples(file));
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
    if (samples->half_size() != n) {
      throw std::invalid_argument("--n does not match the sample file window");
    }
  } else {
    samples.emplace(f0_samples(delta, n));
  }

  char line[80];
  for (const double t : parse_real_grid(at_text)) {
    std::snprintf(line, sizeof line, "%.17g %.17g\n", t, reconstruct_gauss(*samples, r, t));
    out << line;
  }
  return kExitOk;
}

int run_scan_c(const std::string& eps_text, const std::string& dmin_text,
               const std::string& dmax_text, int steps, const std::string& r_rule,
               const std::string& out_path, std::ostream& out) {
  const MillsEpsilon eps(parse_real_literal(eps_text));
  const double dmin = parse_real_literal(dmin_text);
  const double dmax = parse_real_literal(dmax_text);
  if (steps < 1) throw std::invalid_argument("--steps must be >= 1");
  if (!(dmin <= dmax)) throw std::invalid_argument("--delta-min must not exceed --delta-max");

  // Width rules: "fixed-min"/"opt" (r = 1/sqrt(pi-delta), the n=2 optimal
  // width), "opt:<n>", or "fixed:<R>".
  std::function<GaussWidth(Bandwidth)> width_for;
  if (r_rule == "fixed-min" || r_rule == "opt") {
    width_for = [](Bandwidth d) { return optimal_width(d, 2); };
  } else if (r_rule.rfind("opt:", 0) == 0) {
    const int n = std::stoi(r_rule.substr(4));
    width_for = [n](Bandwidth d) { return optimal_width(d, n); };
  } else if (r_rule.rfind("fixed:", 0) == 0) {
    const GaussWidth r(parse_real_literal(r_rule.substr(6)));
    width_for = [r](Bandwidth) { return r; };
  } else {
    throw std::invalid_argument("unknown --r-rule '" + r_rule + "'");
  }

  std::string csv = "delta,C\n";
  char line[80];
  for (int i = 0; i < steps; ++i) {
    const double d =
        steps == 1 ? dmin : dmin + (dmax - dmin) * static_cast<double>(i) / (steps - 1);
    const Bandwidth delta(d);
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", d, c_const(delta, eps, width_for(delta)));
    csv += line;
  }
  write_text(out_path, csv, out);
  return kExitOk;
}

std::vector<ErrorRow> read_csv_rows(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  std::string header;
  if (!std::getline(file, header) || header != "n,lower,measured,upper") {
    throw IoError("'" + path + "': expected header n,lower,measured,upper");
  }
  std::vector<ErrorRow> rows;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    ErrorRow row;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &row.n, &row.lower, &row.measured,
                    &row.upper) != 4) {
      throw IoError("'" + path + "': malformed row '" + line + "'");
    }
    rows.push_back(row);
  }
  return rows;
}

int run_rate_fit(const std::string& csv_path, const std::string& column, int n_from, int n_to,
                 std::ostream& out) {
  ErrorColumn col;
  if (column == "lower") {
    col = ErrorColumn::lower;
  } else if (column == "measured") {
    col = ErrorColumn::measured;
  } else if (column == "upper") {
    col = ErrorColumn::upper;
  } else {
    throw std::invalid_argument("--column must be lower, measured, or upper");
  }

  std::vector<ErrorRow> rows;
  for (const auto& row : read_csv_rows(csv_path)) {
    if (row.n >= n_from && row.n <= n_to) rows.push_back(row);
  }
  char line[48];
  std::snprintf(line, sizeof line, "%.12e\n", rate_fit(rows, col));
  out << line;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bandlimited reconstruction via the Gaussian-windowed sinc series,\n"
               "with certified worst-case error bounds"};
  app.name("gshannon");
  app.require_subcommand(1);

  std::function<int()> action;

  // repro-table
  {
    auto* cmd = app.add_subcommand("repro-table",
                                   "Error table: certified lower bound, measured grid error, "
                                   "certified upper bound per n");
    auto delta = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>();
    auto n_list = std::make_shared<std::string>();
    auto grid = std::make_shared<int>(99);
    auto out_path = std::make_shared<std::string>();
    auto log_scale = std::make_shared<bool>(false);
    cmd->add_option("--delta", *delta, "band edge (e.g. pi/4 or 0.785)")->required();
    cmd->add_option("--eps", *eps, "Mills slack parameter in (0,1) (e.g. 1/7)")->required();
    cmd->add_option("--n-list", *n_list, "window sizes, a:b:c range or comma list")->required();
    cmd->add_option("--grid", *grid, "grid points on (0,1) [default 99]");
    cmd->add_option("--out", *out_path, "write CSV to file instead of stdout");
    cmd->add_flag("--log", *log_scale, "emit natural-log values (plot data)");
    cmd->callback([=, &out, &action] {
      action = [=, &out] {
        return run_repro_table(*delta, *eps, *n_list, *grid, *out_path, *log_scale, out);
      };
    });
  }

  // bounds
  {
    auto* cmd = app.add_subcommand("bounds", "Certified bounds and the constant C at one (n, r)");
    auto delta = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto r_text = std::make_shared<std::string>();
    auto opt_r = std::make_shared<bool>(false);
    cmd->add_option("--delta", *delta)->required();
    cmd->add_option("--eps", *eps)->required();
    cmd->add_option("--n", *n)->required();
    auto* r_opt = cmd->add_option("--r", *r_text, "Gaussian width");
    auto* opt_flag = cmd->add_flag("--opt-r", *opt_r, "use r = sqrt((n-1)/(pi-delta))");
    r_opt->excludes(opt_flag);
    cmd->callback([=, &out, &action] {
      if (r_text->empty() && !*opt_r) {
        throw CLI::RequiredError("one of --r or --opt-r");
      }
      action = [=, &out] { return run_bounds(*delta, *eps, *n, *r_text, *opt_r, out); };
    });
  }

  // reconstruct
  {
    auto* cmd = app.add_subcommand("reconstruct", "Evaluate the windowed reconstruction");
    auto delta = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto r_text = std::make_shared<std::string>();
    auto opt_r = std::make_shared<bool>(false);
    auto samples = std::make_shared<std::string>();
    auto at = std::make_shared<std::string>();
    cmd->add_option("--delta", *delta)->required();
    cmd->add_option("--n", *n)->required();
    auto* r_opt = cmd->add_option("--r", *r_text);
    auto* opt_flag = cmd->add_flag("--opt-r", *opt_r);
    r_opt->excludes(opt_flag);
    cmd->add_option("--samples", *samples, "sample file (default: f0 samples)");
    cmd->add_option("--at", *at, "t or a:b:c grid")->required();
    cmd->callback([=, &out, &action] {
      if (r_text->empty() && !*opt_r) {
        throw CLI::RequiredError("one of --r or --opt-r");
      }
      action = [=, &out] { return run_reconstruct(*delta, *n, *r_text, *opt_r, *samples, *at, out); };
    });
  }

  // scan-c
  {
    auto* cmd = app.add_subcommand("scan-c", "C constant over a bandwidth range");
    auto eps = std::make_shared<std::string>();
    auto dmin = std::make_shared<std::string>();
    auto dmax = std::make_shared<std::string>();
    auto steps = std::make_shared<int>(0);
    auto r_rule = std::make_shared<std::string>("fixed-min");
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--eps", *eps)->required();
    cmd->add_option("--delta-min", *dmin)->required();
    cmd->add_option("--delta-max", *dmax)->required();
    cmd->add_option("--steps", *steps)->required();
    cmd->add_option("--r-rule", *r_rule, "fixed-min | opt[:n] | fixed:<R> [default fixed-min]");
    cmd->add_option("--out", *out_path);
    cmd->callback([=, &out, &action] {
      action = [=, &out] {
        return run_scan_c(*eps, *dmin, *dmax, *steps, *r_rule, *out_path, out);
      };
    });
  }

  // rate-fit
  {
    auto* cmd = app.add_subcommand("rate-fit", "Least-squares decay slope of a CSV column");
    auto csv = std::make_shared<std::string>();
    auto column = std::make_shared<std::string>();
    auto n_from = std::make_shared<int>(0);
    auto n_to = std::make_shared<int>(0);
    cmd->add_option("--csv", *csv)->required();
    cmd->add_option("--column", *column, "lower | measured | upper")->required();
    cmd->add_option("--n-from", *n_from)->required();
    cmd->add_option("--n-to", *n_to)->required();
    cmd->callback([=, &out, &action] {
      action = [=, &out] { return run_rate_fit(*csv, *column, *n_from, *n_to, out); };
    });
  }

  std::vector<const char*> argv;
  argv.push_back("gshannon");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gshannon: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const CertificateError& e) {
    err << "gshannon: certificate invalid: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const IoError& e) {
    err << "gshannon: io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const QuadratureError& e) {
    err << "gshannon: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::exception& e) {
    err << "gshannon: invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gshannon::cli
