#include "buffon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace buffon {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
// cos and sin of 2pi/3.
constexpr double kCosThird = -0.5;
constexpr double kSinThird = kSqrt3 / 2.0;

void require_side(double side) {
    if (!(side > 0.0) || !std::isfinite(side)) {
        throw std::invalid_argument("triangle side must be positive and finite");
    }
}

} // namespace

TriangleSpec::TriangleSpec(Point center, double side, double rotation)
    : center_(center), side_(side), circumradius_(side / kSqrt3), rotation_(rotation) {
    require_side(side);
    if (!std::isfinite(rotation)) {
        throw std::invalid_argument("triangle rotation must be finite");
    }
    rotation_ = std::fmod(rotation, kTwoPi);
    if (rotation_ < 0.0) rotation_ += kTwoPi;
    if (rotation_ >= kTwoPi) rotation_ = 0.0;
}

Vertices TriangleSpec::vertices() const { return make_triangle(center_, side_, rotation_); }

GridSpec::GridSpec(double spacing, double offset_x, double offset_y)
    : spacing_(spacing), offset_x_(offset_x), offset_y_(offset_y) {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw std::invalid_argument("grid spacing must be positive and finite");
    }
    if (!(offset_x >= 0.0 && offset_x < spacing) || !(offset_y >= 0.0 && offset_y < spacing)) {
        throw std::invalid_argument("grid offsets must lie in [0, spacing)");
    }
}

Vertices make_triangle(Point center, double side, double rotation) {
    require_side(side);
    if (!std::isfinite(rotation)) {
        throw std::invalid_argument("triangle rotation must be finite");
    }
    const double r = side / kSqrt3;
    // One sincos, then the remaining corners by the angle-addition identity.
    const double c0 = std::cos(rotation);
    const double s0 = std::sin(rotation);
    const double c1 = c0 * kCosThird - s0 * kSinThird;
    const double s1 = s0 * kCosThird + c0 * kSinThird;
    const double c2 = c0 * kCosThird + s0 * kSinThird;
    const double s2 = s0 * kCosThird - c0 * kSinThird;
    return Vertices{{{
        {center.x + r * c0, center.y + r * s0},
        {center.x + r * c1, center.y + r * s1},
        {center.x + r * c2, center.y + r * s2},
    }}};
}

SortedCoords sorted_axis_coords(const Vertices& v, Axis axis) {
    SortedCoords c{coordinate(v[0], axis), coordinate(v[1], axis), coordinate(v[2], axis)};
    if (c[0] > c[1]) std::swap(c[0], c[1]);
    if (c[1] > c[2]) std::swap(c[1], c[2]);
    if (c[0] > c[1]) std::swap(c[0], c[1]);
    return c;
}

double axis_extent(const Vertices& v, Axis axis) {
    const SortedCoords c = sorted_axis_coords(v, axis);
    return c[2] - c[0];
}

int crossings_along(const Vertices& v, const GridSpec& grid, Axis axis) {
    const SortedCoords c = sorted_axis_coords(v, axis);
    // Start one line below the floor estimate so rounding in the division can
    // never skip the first line above c[0].
    long long k = static_cast<long long>(std::floor((c[0] - grid.offset(axis)) / grid.spacing())) - 1;
    int n = 0;
    for (double line = grid.line(axis, k); line <= c[2]; line = grid.line(axis, ++k)) {
        n += count_line_crossings_sorted(c, line);
    }
    return n;
}

CrossingTally crossings_per_cast(const Vertices& v, const GridSpec& grid) {
    return {crossings_along(v, grid, Axis::X), crossings_along(v, grid, Axis::Y)};
}

} // namespace buffon
