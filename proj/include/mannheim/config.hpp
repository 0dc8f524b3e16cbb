#pragma once

// Run configuration: one JSON document, unknown keys rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mannheim/catalog.hpp"
#include "mannheim/offset.hpp"
#include "mannheim/tolerances.hpp"

namespace mannheim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMinSampleCount = 101;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct MeshOptions {
  Interval v_range{-2.0, 2.0};
  std::size_t v_count = 25;
};

struct RunConfig {
  /// Exactly one of these is set when the run needs a surface.
  std::optional<catalog::Builtin> builtin;
  std::optional<std::filesystem::path> surface_file;

  Interval param_range = catalog::kDefaultRange;
  std::size_t sample_count = kDefaultSampleCount;
  std::optional<double> arc_origin;
  std::vector<OffsetSpec> offsets;
  std::filesystem::path output_dir = ".";
  MeshOptions mesh;
  Tolerances tolerances;
  OffsetGuards guards;
  double developable_tol = 1e-6;
  std::uint64_t seed = kDefaultSeed;

  bool has_surface() const { return builtin.has_value() || surface_file.has_value(); }
};

/// Relative surface file paths resolve against `base_dir`.
RunConfig parse_config(const std::string& json_text,
                       const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError on a violated RunConfig invariant.
void validate(const RunConfig& config);

/// The configured surface, ready for analysis. Throws ConfigError when none is configured.
SurfaceSpec load_surface(const RunConfig& config);

}  // namespace mannheim
