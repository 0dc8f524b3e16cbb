#pragma once

#include <map>
#include <string>
#include <string_view>

namespace mannheim {

/// Named verification tolerances. Every name has a default; overrides of
/// unknown names are rejected so typos do not silently loosen a check.
class Tolerances {
 public:
  Tolerances();

  double get(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names or non-positive values.
  void set(std::string_view name, double value);
  /// Parses "name=value".
  void apply_override(std::string_view assignment);

  const std::map<std::string, double, std::less<>>& all() const { return values_; }

 private:
  std::map<std::string, double, std::less<>> values_;
};

}  // namespace mannheim
