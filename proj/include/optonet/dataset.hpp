#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace optonet {

enum class ColumnType { real, integer, text };

struct Column {
  std::string name;
  ColumnType type = ColumnType::real;
};

using DataCell = std::variant<double, std::int64_t, std::string>;

/// A table plus the parameters that produced it.
struct Dataset {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<DataCell>> rows;
  nlohmann::json provenance = nlohmann::json::object();

  void add_row(std::vector<DataCell> row);
  [[nodiscard]] std::size_t column_index(std::string_view column) const;
  [[nodiscard]] double real(std::size_t row, std::string_view column) const;
};

inline constexpr std::string_view artifact_version = "0.1.0";

/// Shortest round-trip scientific form with a lowercase exponent ("1.5e-06");
/// non-finite values print as nan / inf / -inf.
std::string format_real(double v);
double parse_real(std::string_view s);

/// CSV: header row, ',' separator, LF line endings, no quoting (text cells
/// must not contain ',' or newlines).
std::string to_csv(const Dataset& d);
/// Parses CSV produced by to_csv, using the column types of `schema`.
Dataset parse_csv(std::string_view text, const Dataset& schema);

nlohmann::json to_json(const Dataset& d);
Dataset dataset_from_json(const nlohmann::json& j);

enum class OutputFormat { csv, json };

/// Writes <dir>/<name>.csv plus <name>.provenance.json, or <dir>/<name>.json.
/// Returns the main file path. Throws std::runtime_error when the dataset is empty.
std::filesystem::path write_dataset(const Dataset& d, const std::filesystem::path& dir, OutputFormat format);

/// Cell equality that treats two NaNs as equal.
bool same_cell(const DataCell& a, const DataCell& b);

}  // namespace optonet
