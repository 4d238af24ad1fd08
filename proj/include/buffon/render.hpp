#pragma once

// SVG documents for single casts and for batch histograms.
//
// Output is byte-reproducible: coordinates are printed with a fixed number
// of decimals and nothing time- or environment-dependent is emitted.

#include <string>
#include <vector>

#include "buffon/estimators.hpp"
#include "buffon/geometry.hpp"

namespace buffon {

// Maps world coordinates to pixels: pixel = (world - origin) * scale. The
// y axis is not flipped.
struct Viewport {
    Point origin;
    double scale = 1.0; // pixels per world unit
    int width = 400;
    int height = 400;

    // Viewport of the given world span centered on a point.
    static Viewport centered(Point center, double world_span, int width = 400, int height = 400);

    Point to_pixel(Point world) const {
        return {(world.x - origin.x) * scale, (world.y - origin.y) * scale};
    }
    double world_width() const { return width / scale; }
    double world_height() const { return height / scale; }
};

struct CastScene {
    Vertices vertices;
    std::vector<double> lines_x; // world positions of visible vertical lines
    std::vector<double> lines_y; // world positions of visible horizontal lines
    Viewport viewport;
    int precision = 2;
};

// Collects every grid line inside the viewport.
CastScene make_cast_scene(const Vertices& v, const GridSpec& grid, const Viewport& viewport);

// Default framing: 400 x 400 pixels, two grid spacings wide, centered on the
// triangle's centroid.
CastScene make_cast_scene(const Vertices& v, const GridSpec& grid);

// Header, white background, three black edges, red grid lines, close tag.
// Throws std::invalid_argument for a non-positive or non-finite scale or
// canvas size.
std::string render_cast(const CastScene& scene);

struct HistogramScene {
    std::vector<HistogramBin> bins;
    std::string x_label = "estimated value of pi";
    std::string y_label = "runs";
    double mean = 0.0;
    int width = 640;
    int height = 400;
};

HistogramScene make_histogram_scene(const BatchResult& batch);

// Bars scaled so the tallest spans the plot height, axes with ticks along the
// estimate axis, and a caption carrying the mean to 5 decimals. Throws
// std::invalid_argument when there are no bins.
std::string render_histogram(const HistogramScene& scene);

// "plotNN.svg", zero-padded to two digits; wider indexes keep all digits.
std::string filename_for_cast(int index);

} // namespace buffon
