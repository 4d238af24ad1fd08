#include "buffon/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "buffon/errors.hpp"
#include "buffon/geometry.hpp"

namespace buffon {

double expected_crossings_quadrature(int theta_points, int offset_points) {
    return expected_crossings_quadrature(theta_points, offset_points, 0.0);
}

double expected_crossings_quadrature(int theta_points, int offset_points, double theta_shift) {
    if (theta_points < 8 || offset_points < 8) {
        throw std::invalid_argument("quadrature resolution must be at least 8");
    }
    const double dtheta = kThirdTurn / theta_points;
    const double doffset = 1.0 / offset_points;
    // The x count depends only on offset_x and the y count only on offset_y,
    // so the n x n offset sum is n * (sum over x offsets + sum over y offsets).
    long long total = 0;
    for (int i = 0; i < theta_points; ++i) {
        const Vertices v = make_triangle(kQuadratureCenter, 1.0, theta_shift + (i + 0.5) * dtheta);
        for (int j = 0; j < offset_points; ++j) {
            const double o = (j + 0.5) * doffset;
            const GridSpec grid(1.0, o, o);
            total += crossings_along(v, grid, Axis::X) + crossings_along(v, grid, Axis::Y);
        }
    }
    return static_cast<double>(total) / (static_cast<double>(theta_points) * offset_points);
}

double mean_width_identity(double side) {
    if (!(side > 0.0)) throw std::invalid_argument("side must be positive");
    return 3.0 * side / std::numbers::pi;
}

double expected_crossings_closed_form(double side, double spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be positive");
    if (side != spacing) {
        throw UnsupportedConfiguration("closed form holds only for side == spacing");
    }
    return 2.0 * (2.0 * mean_width_identity(side) / spacing);
}

} // namespace buffon
