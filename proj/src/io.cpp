#include "llab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace llab::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw PreconditionError("malformed number '" + std::string(s) + "'");
  return v;
}

namespace {

bool is_number(std::string_view s) {
  try {
    parse_double(s);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    auto field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
    out.emplace_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_fields(line);
    if (first) {
      first = false;
      bool numeric = true;
      for (const auto& f : fields) numeric = numeric && is_number(f);
      if (!numeric) {
        table.header = std::move(fields);
        continue;
      }
    }
    if (!table.header.empty() && fields.size() != table.header.size())
      throw PreconditionError("csv: row has " + std::to_string(fields.size()) +
                              " fields, header has " + std::to_string(table.header.size()));
    table.rows.push_back(std::move(fields));
  }
  return table;
}

std::string write_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out;
}

std::string to_csv(const ErrorCurve& curve) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(curve.entries.size());
  for (const auto& e : curve.entries)
    rows.push_back({std::to_string(e.n), format_double(e.value), to_string(e.kind)});
  return write_csv({"n", "value", "kind"}, rows);
}

ErrorCurve curve_from_csv(std::string_view text) {
  auto table = parse_csv(text);
  if (table.header != std::vector<std::string>{"n", "value", "kind"})
    throw PreconditionError("error curve csv: expected header n,value,kind");
  ErrorCurve curve;
  for (const auto& r : table.rows) {
    const double n = parse_double(r[0]);
    if (n < 0 || n != std::floor(n)) throw PreconditionError("error curve csv: bad index " + r[0]);
    curve.entries.push_back({static_cast<std::size_t>(n), parse_double(r[1]),
                             error_kind_from_string(r[2])});
  }
  return curve;
}

nlohmann::json to_json(const ErrorCurve& curve) {
  auto arr = nlohmann::json::array();
  for (const auto& e : curve.entries)
    arr.push_back({{"n", e.n}, {"value", e.value}, {"kind", to_string(e.kind)}});
  return {{"entries", arr}};
}

ErrorCurve curve_from_json(const nlohmann::json& j) {
  ErrorCurve curve;
  for (const auto& e : j.at("entries"))
    curve.entries.push_back({e.at("n").get<std::size_t>(), e.at("value").get<double>(),
                             error_kind_from_string(e.at("kind").get<std::string>())});
  return curve;
}

std::vector<double> values_from_csv(std::string_view text) {
  auto table = parse_csv(text);
  std::vector<double> v;
  v.reserve(table.rows.size());
  for (const auto& r : table.rows) v.push_back(parse_double(r.back()));
  return v;
}

Matrix matrix_from_csv(std::string_view text) {
  auto table = parse_csv(text);
  if (!table.header.empty()) throw PreconditionError("matrix csv: unexpected header row");
  if (table.rows.empty()) throw PreconditionError("matrix csv: no rows");
  Matrix m(table.rows.size(), table.rows.front().size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (table.rows[i].size() != m.cols)
      throw PreconditionError("matrix csv: ragged row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < m.cols; ++j) {
      m(i, j) = parse_double(table.rows[i][j]);
      if (!std::isfinite(m(i, j))) throw PreconditionError("matrix csv: non-finite entry");
    }
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace llab::io
