#include "mannheim/tolerances.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mannheim {

Tolerances::Tolerances()
    : values_{
          // dual algebra
          {"algebra", 1e-12},
          {"lift_relative", 1e-6},
          // line geometry
          {"pluecker", 1e-12},
          {"line_roundtrip", 1e-10},
          {"line_distance", 1e-9},
          // ruled-surface engine
          {"dual_unit", 1e-9},
          {"striction_eq", 1e-5},
          {"arc_length", 1e-5},
          {"frame_ode_sampled", 1e-4},
          {"frame_ode_analytic", 1e-8},
          {"curvature_identities", 1e-9},
          {"striction_invariance", 1e-6},
          // hyperbolic paraboloid reproduction
          {"paraboloid_frame", 1e-6},
          {"paraboloid_gamma", 1e-4},
          {"paraboloid_dual_curve", 1e-9},
          {"paraboloid_offset_striction", 1e-9},
          {"paraboloid_angle_profile", 1e-9},
          // offsets
          {"frame_rotation", 1e-12},
          {"moment_consistency", 1e-9},
          {"mannheim_real", 1e-4},
          {"mannheim_dual", 1e-3},
          {"offset_invariants", 1e-3},
          {"offset_frame", 1e-4},
          {"angle_law", 1e-6},
          {"developable_base", 1e-8},
          {"developable_offset", 1e-4},
          // cli
          {"csv_roundtrip", 1e-4},
      } {}

double Tolerances::get(std::string_view name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("unknown tolerance '" + std::string(name) + "'");
  return it->second;
}

void Tolerances::set(std::string_view name, double value) {
  const auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("unknown tolerance '" + std::string(name) + "'");
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("tolerance '" + std::string(name) + "' must be positive and finite");
  }
  it->second = value;
}

void Tolerances::apply_override(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw std::invalid_argument("tolerance override must look like name=value, got '" +
                                std::string(assignment) + "'");
  }
  const std::string_view name = assignment.substr(0, eq);
  const std::string_view text = assignment.substr(eq + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("tolerance value '" + std::string(text) + "' is not a number");
  }
  set(name, value);
}

}  // namespace mannheim
