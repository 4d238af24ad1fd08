#pragma once

// Equilateral triangle casts against a square grid of lines.
//
// Coordinates are real-valued world units. A grid consists of the vertical
// lines x = offset_x + k*spacing and horizontal lines y = offset_y + k*spacing
// for every integer k. A triangle side crosses a line at position t when
// lower < t <= upper for the side's extent along that axis; vertex-on-line
// ties are resolved by this half-open rule and never resampled.

#include <array>
#include <numbers>

namespace buffon {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kThirdTurn = kTwoPi / 3.0;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class Axis { X, Y };

inline double coordinate(const Point& p, Axis axis) { return axis == Axis::X ? p.x : p.y; }

// Triangle corners in construction order (vertex k sits at rotation + k*2pi/3).
struct Vertices {
    std::array<Point, 3> points;

    const Point& operator[](std::size_t i) const { return points[i]; }
    Point& operator[](std::size_t i) { return points[i]; }
};

// Ascending coordinates of the three vertices along one axis.
using SortedCoords = std::array<double, 3>;

class TriangleSpec {
public:
    // Throws std::invalid_argument for a non-positive or non-finite side, or
    // a non-finite rotation. The rotation is reduced into [0, 2pi).
    TriangleSpec(Point center, double side, double rotation);

    Point center() const { return center_; }
    double side() const { return side_; }
    double circumradius() const { return circumradius_; }
    double rotation() const { return rotation_; }

    Vertices vertices() const;

private:
    Point center_;
    double side_;
    double circumradius_;
    double rotation_;
};

class GridSpec {
public:
    // Throws std::invalid_argument unless spacing > 0 and both offsets are in
    // [0, spacing).
    GridSpec(double spacing, double offset_x, double offset_y);

    double spacing() const { return spacing_; }
    double offset_x() const { return offset_x_; }
    double offset_y() const { return offset_y_; }
    double offset(Axis axis) const { return axis == Axis::X ? offset_x_ : offset_y_; }

    // Position of the k-th line of a family. Every caller that needs a line
    // position goes through here so that all counting routes agree bit for bit.
    double line(Axis axis, long long k) const { return offset(axis) + static_cast<double>(k) * spacing_; }

private:
    double spacing_;
    double offset_x_;
    double offset_y_;
};

struct CrossingTally {
    int count_x = 0;
    int count_y = 0;

    int total() const { return count_x + count_y; }
    friend bool operator==(const CrossingTally&, const CrossingTally&) = default;
};

// Vertex k = center + (side/sqrt3) * (cos(rotation + k*2pi/3), sin(rotation + k*2pi/3)).
Vertices make_triangle(Point center, double side, double rotation);

SortedCoords sorted_axis_coords(const Vertices& v, Axis axis);

// Width of the vertices' projection onto the axis (max - min).
double axis_extent(const Vertices& v, Axis axis);

inline bool segment_crosses_line(double p, double q, double line_pos) {
    const double lo = p < q ? p : q;
    const double hi = p < q ? q : p;
    return lo < line_pos && line_pos <= hi;
}

// Counts the vertex pairs (i < j) of a sorted triple that straddle line_pos.
// Any two vertices of a triangle form a side, so this equals the number of
// sides crossing the line.
inline int count_line_crossings_sorted(const SortedCoords& c, double line_pos) {
    int n = 0;
    if (c[0] < line_pos && line_pos <= c[1]) ++n;
    if (c[0] < line_pos && line_pos <= c[2]) ++n;
    if (c[1] < line_pos && line_pos <= c[2]) ++n;
    return n;
}

// Crossings of a single family; lines are enumerated from the bounding interval.
int crossings_along(const Vertices& v, const GridSpec& grid, Axis axis);

CrossingTally crossings_per_cast(const Vertices& v, const GridSpec& grid);

} // namespace buffon
