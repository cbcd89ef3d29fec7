#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gshannon::cli {

// Exit codes: 0 success, 2 flag/parse error, 3 certificate invalid, 4 file I/O.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCertificate = 3;
inline constexpr int kExitIo = 4;

/// "pi", "pi/4", "3pi/4", "1/7", "0.25" -> double (pi-fractions within 1 ulp).
double parse_real_literal(const std::string& text);

/// "7:2:25" (start:step:stop, inclusive) or "7,9,11".
std::vector<int> parse_int_list(const std::string& text);

/// Single value or start:step:stop grid of reals.
std::vector<double> parse_real_grid(const std::string& text);

/// Full command-line entry point; argv-style arguments without the program
/// name.  Writes data to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gshannon::cli
