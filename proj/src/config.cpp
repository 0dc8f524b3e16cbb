#include "mannheim/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>

#include "mannheim/io.hpp"

namespace mannheim {

namespace {

using nlohmann::json;

void reject_unknown(const json& object, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!object.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + " must be finite");
  return x;
}

std::size_t count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(where + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

Interval interval(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ConfigError(where + " must be [lo, hi]");
  const Interval r{number(v[0], where + "[0]"), number(v[1], where + "[1]")};
  if (!(r.hi > r.lo)) throw ConfigError(where + " must satisfy lo < hi");
  return r;
}

void parse_surface(const json& s, RunConfig& config, const std::filesystem::path& base_dir) {
  reject_unknown(s, "surface", {"builtin", "file", "alpha", "beta", "pitch"});
  const bool has_builtin = s.contains("builtin");
  const bool has_file = s.contains("file");
  if (has_builtin == has_file) {
    throw ConfigError("surface needs exactly one of 'builtin' or 'file'");
  }
  if (has_file) {
    if (!s["file"].is_string()) throw ConfigError("surface.file must be a string");
    for (const char* p : {"alpha", "beta", "pitch"}) {
      if (s.contains(p)) throw ConfigError(std::string("surface.") + p + " applies only to builtins");
    }
    std::filesystem::path file = s["file"].get<std::string>();
    config.surface_file = file.is_absolute() ? file : base_dir / file;
    return;
  }
  if (!s["builtin"].is_string()) throw ConfigError("surface.builtin must be a string");
  const std::string name = s["builtin"].get<std::string>();
  const auto kind = catalog::parse_kind(name);
  if (!kind) {
    throw ConfigError("unknown builtin surface '" + name +
                      "' (hyperbolic_paraboloid, cone, small_circle, helicoid)");
  }
  catalog::Builtin b{*kind, catalog::default_parameter(*kind)};
  const std::string own = catalog::parameter_name(*kind);
  for (const char* p : {"alpha", "beta", "pitch"}) {
    if (!s.contains(p)) continue;
    if (own != p) throw ConfigError(std::string("surface.") + p + " does not apply to " + name);
    b.parameter = number(s[p], std::string("surface.") + p);
  }
  config.builtin = b;
}

OffsetSpec parse_offset(const json& o, std::size_t k) {
  const std::string where = "offsets[" + std::to_string(k) + "]";
  if (!o.is_object() || !o.contains("mode") || !o["mode"].is_string()) {
    throw ConfigError(where + " needs a string 'mode'");
  }
  const std::string mode = o["mode"].get<std::string>();
  if (mode == "theorem_consistent") {
    reject_unknown(o, where, {"mode", "c", "c_star"});
    const double c = o.contains("c") ? number(o["c"], where + ".c") : M_PI / 2.0;
    const double c_star = o.contains("c_star") ? number(o["c_star"], where + ".c_star") : 0.0;
    return OffsetSpec::theorem_consistent(c, c_star);
  }
  if (mode == "constant_angle") {
    reject_unknown(o, where, {"mode", "theta", "theta_star"});
    if (!o.contains("theta") || !o.contains("theta_star")) {
      throw ConfigError(where + " (constant_angle) needs 'theta' and 'theta_star'");
    }
    return OffsetSpec::constant_angle(number(o["theta"], where + ".theta"),
                                      number(o["theta_star"], where + ".theta_star"));
  }
  throw ConfigError(where + ".mode must be 'theorem_consistent' or 'constant_angle', got '" +
                    mode + "'");
}

}  // namespace

RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, "config",
                 {"surface", "param_range", "sample_count", "arc_origin", "offsets", "output_dir",
                  "mesh", "tolerances", "guards", "developable_tol", "seed"});

  RunConfig config;
  if (doc.contains("surface")) parse_surface(doc["surface"], config, base_dir);
  if (doc.contains("param_range")) config.param_range = interval(doc["param_range"], "param_range");
  if (doc.contains("sample_count")) config.sample_count = count(doc["sample_count"], "sample_count");
  if (doc.contains("arc_origin")) config.arc_origin = number(doc["arc_origin"], "arc_origin");
  if (doc.contains("offsets")) {
    const json& offsets = doc["offsets"];
    if (!offsets.is_array()) throw ConfigError("offsets must be an array");
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      config.offsets.push_back(parse_offset(offsets[k], k));
    }
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) throw ConfigError("output_dir must be a string");
    std::filesystem::path out = doc["output_dir"].get<std::string>();
    config.output_dir = out.is_absolute() ? out : base_dir / out;
  }
  if (doc.contains("mesh")) {
    const json& m = doc["mesh"];
    reject_unknown(m, "mesh", {"v_range", "v_count"});
    if (m.contains("v_range")) config.mesh.v_range = interval(m["v_range"], "mesh.v_range");
    if (m.contains("v_count")) config.mesh.v_count = count(m["v_count"], "mesh.v_count");
  }
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) throw ConfigError("tolerances must be an object");
    for (const auto& [name, value] : t.items()) {
      try {
        config.tolerances.set(name, number(value, "tolerances." + name));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }
  if (doc.contains("guards")) {
    const json& g = doc["guards"];
    reject_unknown(g, "guards", {"gamma_min", "sin_min", "theta_margin"});
    if (g.contains("gamma_min")) config.guards.gamma_min = number(g["gamma_min"], "guards.gamma_min");
    if (g.contains("sin_min")) config.guards.sin_min = number(g["sin_min"], "guards.sin_min");
    if (g.contains("theta_margin")) {
      config.guards.theta_margin = number(g["theta_margin"], "guards.theta_margin");
    }
  }
  if (doc.contains("developable_tol")) {
    config.developable_tol = number(doc["developable_tol"], "developable_tol");
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
    config.seed = doc["seed"].get<std::uint64_t>();
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.parent_path().empty() ? "." : path.parent_path());
}

void validate(const RunConfig& config) {
  if (config.sample_count < kMinSampleCount || config.sample_count % 2 == 0) {
    throw ConfigError("sample_count must be odd and >= " + std::to_string(kMinSampleCount) +
                      ", got " + std::to_string(config.sample_count));
  }
  if (config.builtin && config.surface_file) throw ConfigError("at most one surface per run");
  if (config.mesh.v_count < 2) throw ConfigError("mesh.v_count must be >= 2");
  if (!(config.mesh.v_range.hi > config.mesh.v_range.lo)) {
    throw ConfigError("mesh.v_range must satisfy lo < hi");
  }
  if (!(config.developable_tol > 0.0)) throw ConfigError("developable_tol must be positive");
  const OffsetGuards& g = config.guards;
  if (!(g.gamma_min > 0.0) || !(g.sin_min > 0.0) || !(g.theta_margin >= 0.0)) {
    throw ConfigError("guards must be positive");
  }
}

SurfaceSpec load_surface(const RunConfig& config) {
  std::optional<SurfaceSpec> spec;
  if (config.builtin) {
    spec = catalog::make(*config.builtin, config.param_range, config.sample_count);
  } else if (config.surface_file) {
    try {
      spec = io::read_sampled_surface_file(config.surface_file->string());
    } catch (const io::FormatError& e) {
      throw ConfigError(e.what());
    }
    const std::size_t n = spec->sample_count();
    if (n < kMinSampleCount || n % 2 == 0) {
      throw ConfigError("sampled-curve file must hold an odd number >= " +
                        std::to_string(kMinSampleCount) + " of rows, got " + std::to_string(n));
    }
  } else {
    throw ConfigError("config has no 'surface'");
  }
  if (config.arc_origin) {
    if (!spec->range().contains(*config.arc_origin)) {
      throw ConfigError("arc_origin lies outside the parameter range");
    }
    spec = spec->with_arc_origin(*config.arc_origin);
  }
  return *spec;
}

}  // namespace mannheim
