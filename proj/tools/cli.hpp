#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "strudyn/fem/mesh.hpp"

namespace strudyn::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 2;
inline constexpr int kNumericalError = 3;

/// Runs the command line `args` (without the program name). Tables go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a,b,c" -> {"a", "b", "c"}; empty items are rejected.
std::vector<std::string> split_list(const std::string& s, char sep = ',');
std::vector<double> parse_numbers(const std::string& s);
/// "lo:hi".
std::pair<double, double> parse_range(const std::string& s);
/// "x1,y1;x2,y2".
std::vector<Point> parse_points(const std::string& s);

/// Reads `key=value` lines ('#' starts a comment) into "--key=value" tokens.
std::vector<std::string> read_config_file(const std::string& path);

} // namespace strudyn::cli
