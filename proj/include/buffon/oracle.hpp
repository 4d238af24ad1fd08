#pragma once

// Deterministic routes to the expected number of grid crossings per cast,
// independent of any random sampling.

#include <numbers>

#include "buffon/geometry.hpp"

namespace buffon {

// Triangle center used by the quadrature. Moving the center is the same as
// shifting the offset lattice; at the origin the lattice's mirror symmetry
// makes the counting errors of mirrored casts add instead of cancel.
inline constexpr Point kQuadratureCenter{std::numbers::phi - 1.0, 2.0 - std::numbers::phi};

// Midpoint-rule average of crossings_per_cast over the lattice
// theta_points x offset_points x offset_points covering
// [0, 2pi/3) x [0, 1) x [0, 1) with side = spacing = 1. The integrand has
// period 2pi/3 in theta, so one third of a turn covers the full average.
// Throws std::invalid_argument when either resolution is below 8.
double expected_crossings_quadrature(int theta_points, int offset_points);

// Same lattice with the theta samples shifted by theta_shift.
double expected_crossings_quadrature(int theta_points, int offset_points, double theta_shift);

// Rotational average of the triangle's projection width, 3*side/pi. By
// Cauchy's formula this equals perimeter/pi for any convex body.
double mean_width_identity(double side);

// Two line families, each crossed 2*(mean width)/spacing times on average:
// 4 * mean_width_identity(side) / spacing = 12/pi. Throws
// UnsupportedConfiguration when side != spacing.
double expected_crossings_closed_form(double side, double spacing);

} // namespace buffon
