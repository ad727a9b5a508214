#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace optonet {

struct CalcOutput {
  std::string name;
  double value = 0.0;
  std::string unit;
};

struct CalcResult {
  std::string formula;
  std::map<std::string, double> inputs;
  std::vector<CalcOutput> outputs;

  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] double value(std::string_view output) const;
};

struct CalcParam {
  std::string name;
  std::string description;
  bool required = true;
  double fallback = 0.0;
};

struct CalcFormula {
  std::string name;
  std::string summary;
  std::vector<CalcParam> params;
};

const std::vector<CalcFormula>& calc_formulas();

/// Evaluates a named formula. Throws UsageError for unknown formulas, unknown
/// or missing parameters (message lists the expected parameters), or domain
/// violations.
CalcResult calc(std::string_view formula, const std::map<std::string, double>& params);

/// Parses "--key value" / "--key=value" pairs into numbers. Throws UsageError.
std::map<std::string, double> parse_calc_args(const std::vector<std::string>& args);

}  // namespace optonet
