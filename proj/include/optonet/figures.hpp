#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "optonet/dataset.hpp"

namespace optonet {

/// key=value parameter overrides. Lists are comma separated. Every key must
/// be consumed; finish() rejects leftovers with the list of accepted keys.
class Overrides {
 public:
  Overrides() = default;
  explicit Overrides(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  /// Parses "key=value" items. Throws UsageError on malformed items.
  static Overrides from_assignments(const std::vector<std::string>& items);

  double real(const std::string& key, double fallback);
  std::vector<double> reals(const std::string& key, std::vector<double> fallback);
  [[nodiscard]] bool has(const std::string& key) const { return values_.contains(key); }
  /// Throws UsageError naming unknown keys and the accepted set.
  void finish(std::string_view context) const;

  /// Parameters actually in effect after defaults, for provenance.
  [[nodiscard]] const std::map<std::string, std::string>& effective() const { return effective_; }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> accepted_;
  std::map<std::string, std::string> effective_;
};

/// Logarithmic grid min..max with `per_decade` points per decade; exact powers of ten land on decades.
std::vector<double> log_grid(double min, double max, int per_decade);

std::vector<std::string> figure_ids();

/// Builds the dataset for a figure id (fig3, fig4, fig6, fig7, fig8, fig9).
/// Throws UsageError for an unknown id or invalid override.
Dataset build_figure(std::string_view id, Overrides overrides = {});

}  // namespace optonet
