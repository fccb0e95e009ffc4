#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace strudyn {

struct ProbeError {
    std::string name;
    double l2 = 0.0;
    double linf = 0.0;
};

struct ErrorReport {
    std::string method;
    std::string label;
    /// Component or quantity the norms refer to ("u", "x", "y", ...).
    std::string component;
    double h = 0.0;
    double dt = 0.0;
    double T = 0.0;
    double linf_l2 = 0.0;
    double l2_h1 = 0.0;
    double linf_linf = 0.0;
    std::vector<ProbeError> probes;
};

/// Plain table with a header row; cells are strings.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    /// Columns padded to equal width, two spaces apart.
    std::string aligned() const;
    /// Comma-separated with the header row.
    std::string csv() const;
};

/// "%.17g".
std::string full_precision(double v);
/// Three significant digits ("%.3g").
std::string three_digits(double v);

/// Writes through a temporary file in the same directory and renames it
/// into place, creating missing parent directories. Throws IoError when
/// the file cannot be written.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace strudyn
