#include "optonet/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "optonet/error.hpp"

namespace optonet {

void Dataset::add_row(std::vector<DataCell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width " + std::to_string(row.size()) + " does not match " +
                           std::to_string(columns.size()) + " columns in " + name);
  }
  rows.push_back(std::move(row));
}

std::size_t Dataset::column_index(std::string_view column) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == column) return i;
  }
  throw std::out_of_range("no column '" + std::string(column) + "' in " + name);
}

double Dataset::real(std::size_t row, std::string_view column) const {
  const auto& cell = rows.at(row).at(column_index(column));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  throw std::invalid_argument("column '" + std::string(column) + "' is text");
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

namespace {

std::string format_cell(const DataCell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      c);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

DataCell parse_cell(std::string_view s, ColumnType t) {
  switch (t) {
    case ColumnType::real:
      return parse_real(s);
    case ColumnType::integer: {
      std::int64_t v = 0;
      const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
      }
      return v;
    }
    case ColumnType::text:
      return std::string(s);
  }
  return std::string(s);
}

std::string to_string(ColumnType t) {
  switch (t) {
    case ColumnType::real: return "real";
    case ColumnType::integer: return "integer";
    case ColumnType::text: return "text";
  }
  return "real";
}

ColumnType column_type_from(const std::string& s) {
  if (s == "real") return ColumnType::real;
  if (s == "integer") return ColumnType::integer;
  if (s == "text") return ColumnType::text;
  throw std::invalid_argument("unknown column type '" + s + "'");
}

}  // namespace

std::string to_csv(const Dataset& d) {
  std::string out;
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    if (i) out += ',';
    out += d.columns[i].name;
  }
  out += '\n';
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

Dataset parse_csv(std::string_view text, const Dataset& schema) {
  Dataset d;
  d.name = schema.name;
  d.columns = schema.columns;
  d.provenance = schema.provenance;
  bool header = true;
  for (auto line : split(text, '\n')) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (header) {
      if (fields.size() != d.columns.size()) throw std::invalid_argument("CSV header does not match schema");
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] != d.columns[i].name) throw std::invalid_argument("CSV header does not match schema");
      }
      header = false;
      continue;
    }
    if (fields.size() != d.columns.size()) throw std::invalid_argument("CSV row has wrong width");
    std::vector<DataCell> row;
    row.reserve(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) row.push_back(parse_cell(fields[i], d.columns[i].type));
    d.rows.push_back(std::move(row));
  }
  return d;
}

nlohmann::json to_json(const Dataset& d) {
  nlohmann::json j;
  j["name"] = d.name;
  j["columns"] = nlohmann::json::array();
  for (const auto& c : d.columns) j["columns"].push_back({{"name", c.name}, {"type", to_string(c.type)}});
  // Reals are stored as strings so NaN/inf survive and digits round-trip exactly.
  j["rows"] = nlohmann::json::array();
  for (const auto& row : d.rows) {
    auto r = nlohmann::json::array();
    for (const auto& cell : row) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              r.push_back(format_real(v));
            } else {
              r.push_back(v);
            }
          },
          cell);
    }
    j["rows"].push_back(std::move(r));
  }
  j["provenance"] = d.provenance;
  return j;
}

Dataset dataset_from_json(const nlohmann::json& j) {
  Dataset d;
  d.name = j.at("name").get<std::string>();
  for (const auto& c : j.at("columns")) {
    d.columns.push_back({c.at("name").get<std::string>(), column_type_from(c.at("type").get<std::string>())});
  }
  for (const auto& r : j.at("rows")) {
    std::vector<DataCell> row;
    for (std::size_t i = 0; i < r.size(); ++i) {
      switch (d.columns.at(i).type) {
        case ColumnType::real: row.emplace_back(parse_real(r[i].get<std::string>())); break;
        case ColumnType::integer: row.emplace_back(r[i].get<std::int64_t>()); break;
        case ColumnType::text: row.emplace_back(r[i].get<std::string>()); break;
      }
    }
    d.add_row(std::move(row));
  }
  d.provenance = j.value("provenance", nlohmann::json::object());
  return d;
}

std::filesystem::path write_dataset(const Dataset& d, const std::filesystem::path& dir, OutputFormat format) {
  if (d.rows.empty()) throw std::runtime_error("dataset '" + d.name + "' has no rows");
  std::filesystem::create_directories(dir);
  const auto write = [](const std::filesystem::path& p, const std::string& body) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << body;
  };
  if (format == OutputFormat::json) {
    const auto path = dir / (d.name + ".json");
    write(path, to_json(d).dump(2) + "\n");
    return path;
  }
  const auto path = dir / (d.name + ".csv");
  write(path, to_csv(d));
  write(dir / (d.name + ".provenance.json"), d.provenance.dump(2) + "\n");
  return path;
}

bool same_cell(const DataCell& a, const DataCell& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<double>(&a)) {
    const double y = std::get<double>(b);
    return (std::isnan(*x) && std::isnan(y)) || *x == y;
  }
  return a == b;
}

}  // namespace optonet
