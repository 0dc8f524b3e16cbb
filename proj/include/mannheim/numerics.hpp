#pragma once

// Grid calculus on a uniform parameter grid.

#include <cstddef>
#include <span>
#include <vector>

#include "mannheim/dual.hpp"

namespace mannheim::numerics {

/// Uniform grid of `count` nodes over [lo, hi]; the last node is exactly hi.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

/// Second-order central first derivative; second-order one-sided at the ends.
template <class T>
std::vector<T> first_derivative(std::span<const T> f, double h);

/// Second-order central second derivative; second-order one-sided at the ends.
template <class T>
std::vector<T> second_derivative(std::span<const T> f, double h);

/// Fourth-order five-point first derivative, falling back to the
/// second-order stencils within two nodes of either end. Used for residual
/// diagnostics where the 3-point stencil's truncation error would dominate.
template <class T>
std::vector<T> first_derivative_5pt(std::span<const T> f, double h);

/// Cumulative integral from the first node with composite Simpson on node
/// pairs; odd nodes use the three-point partial rule. Requires an odd count.
std::vector<double> cumulative_simpson(std::span<const double> f, double h);

/// Cubic Hermite interpolation on ascending nodes x with values y and slopes dy.
/// x outside [x.front(), x.back()] is clamped to the end interval and extrapolated.
double hermite(std::span<const double> x, std::span<const double> y,
               std::span<const double> dy, double at);

/// Index i such that x[i] <= at <= x[i+1], clamped into [0, n-2].
std::size_t bracket(std::span<const double> x, double at);

}  // namespace mannheim::numerics
