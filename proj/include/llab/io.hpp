#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "llab/core.hpp"

namespace llab::io {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);
double parse_double(std::string_view s);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Comma-separated text with an optional header row. Blank lines and lines
/// starting with '#' are skipped; CRLF is accepted. The first row is taken
/// as a header when any of its fields is non-numeric.
CsvTable parse_csv(std::string_view text);

/// Writer emitting `.` decimals and LF line endings.
std::string write_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

std::string to_csv(const ErrorCurve& curve);
ErrorCurve curve_from_csv(std::string_view text);
nlohmann::json to_json(const ErrorCurve& curve);
ErrorCurve curve_from_json(const nlohmann::json& j);

/// A sequence file: one value per row; when rows carry several columns the
/// last one is the value (so `n,value` files work).
std::vector<double> values_from_csv(std::string_view text);
/// A dense matrix, one row per line, no header.
Matrix matrix_from_csv(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace llab::io
