#pragma once

// Verification suites run by the `verify` command. Every check records the
// measured residual next to its tolerance.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mannheim/offset.hpp"
#include "mannheim/tolerances.hpp"

namespace mannheim::verify {

struct Check {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  std::vector<Check> checks;
  /// Reported findings that are not asserted.
  std::vector<std::string> notes;

  bool passed() const;
  std::vector<std::string> failing_suites() const;
  const Check& find(const std::string& suite, const std::string& name) const;
  /// Deterministic for fixed settings: no timings, fixed number formatting.
  void print(std::ostream& out) const;
};

struct Settings {
  Tolerances tolerances;
  std::uint64_t seed = 42;
  std::size_t sample_count = kDefaultSampleCount;
  std::size_t random_count = 1000;
  OffsetGuards guards;
  double developable_tol = 1e-6;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dual-algebra", "line-geometry", "ruled-surface",
                                              "paraboloid",   "mannheim-offset", "cli"};
  return names;
}

void dual_algebra_suite(const Settings& settings, Report& report);
void line_geometry_suite(const Settings& settings, Report& report);
void ruled_surface_suite(const Settings& settings, Report& report);
void paraboloid_suite(const Settings& settings, Report& report);
void mannheim_offset_suite(const Settings& settings, Report& report);
/// Analyze-CSV round trip; belongs to the cli suite.
void cli_suite(const Settings& settings, Report& report);

Report run_all(const Settings& settings);

}  // namespace mannheim::verify
