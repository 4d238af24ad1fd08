#include "buffon/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace buffon {

namespace {

// Fixed-decimal text without a "-0.00".
std::string num(double v, int precision) {
    std::string s = fmt::format("{:.{}f}", v, precision);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

void check_viewport(const Viewport& vp) {
    if (!(vp.scale > 0.0) || !std::isfinite(vp.scale)) {
        throw std::invalid_argument("viewport scale must be positive and finite");
    }
    if (vp.width <= 0 || vp.height <= 0) {
        throw std::invalid_argument("canvas size must be positive");
    }
}

std::vector<double> visible_lines(const GridSpec& grid, Axis axis, double lo, double hi) {
    std::vector<double> out;
    auto k = static_cast<long long>(std::floor((lo - grid.offset(axis)) / grid.spacing())) - 1;
    for (double line = grid.line(axis, k); line <= hi; line = grid.line(axis, ++k)) {
        if (line >= lo) out.push_back(line);
    }
    return out;
}

void svg_line(std::string& out, double x1, double y1, double x2, double y2, const char* color, int precision) {
    out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                       num(x1, precision), num(y1, precision), num(x2, precision), num(y2, precision), color);
}

} // namespace

Viewport Viewport::centered(Point center, double world_span, int width, int height) {
    if (!(world_span > 0.0) || !std::isfinite(world_span)) {
        throw std::invalid_argument("viewport span must be positive and finite");
    }
    Viewport vp;
    vp.width = width;
    vp.height = height;
    vp.scale = std::min(width, height) / world_span;
    vp.origin = {center.x - 0.5 * width / vp.scale, center.y - 0.5 * height / vp.scale};
    return vp;
}

CastScene make_cast_scene(const Vertices& v, const GridSpec& grid, const Viewport& viewport) {
    check_viewport(viewport);
    CastScene scene;
    scene.vertices = v;
    scene.viewport = viewport;
    scene.lines_x = visible_lines(grid, Axis::X, viewport.origin.x, viewport.origin.x + viewport.world_width());
    scene.lines_y = visible_lines(grid, Axis::Y, viewport.origin.y, viewport.origin.y + viewport.world_height());
    return scene;
}

CastScene make_cast_scene(const Vertices& v, const GridSpec& grid) {
    const Point centroid{(v[0].x + v[1].x + v[2].x) / 3.0, (v[0].y + v[1].y + v[2].y) / 3.0};
    return make_cast_scene(v, grid, Viewport::centered(centroid, 2.0 * grid.spacing()));
}

std::string render_cast(const CastScene& scene) {
    const Viewport& vp = scene.viewport;
    check_viewport(vp);
    const int p = scene.precision;
    std::string out = fmt::format("<svg height=\"{}\" width=\"{}\" xmlns=\"http://www.w3.org/2000/svg\">\n",
                                  vp.height, vp.width);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\" />\n", vp.width, vp.height);
    for (std::size_t i = 0; i < 3; ++i) {
        const Point a = vp.to_pixel(scene.vertices[i]);
        const Point b = vp.to_pixel(scene.vertices[(i + 1) % 3]);
        svg_line(out, a.x, a.y, b.x, b.y, "black", p);
    }
    for (double x : scene.lines_x) {
        const double px = (x - vp.origin.x) * vp.scale;
        svg_line(out, px, 0.0, px, vp.height, "red", p);
    }
    for (double y : scene.lines_y) {
        const double py = (y - vp.origin.y) * vp.scale;
        svg_line(out, 0.0, py, vp.width, py, "red", p);
    }
    out += "</svg>\n";
    return out;
}

HistogramScene make_histogram_scene(const BatchResult& batch) {
    HistogramScene scene;
    scene.bins = batch.histogram;
    scene.mean = batch.mean;
    return scene;
}

std::string render_histogram(const HistogramScene& scene) {
    if (scene.bins.empty()) throw std::invalid_argument("histogram has no bins");
    if (scene.width <= 0 || scene.height <= 0) throw std::invalid_argument("canvas size must be positive");

    constexpr double left = 70.0, right = 20.0, top = 40.0, bottom = 60.0;
    const double plot_w = scene.width - left - right;
    const double plot_h = scene.height - top - bottom;
    if (plot_w <= 0.0 || plot_h <= 0.0) throw std::invalid_argument("canvas too small for histogram");

    const double lo = scene.bins.front().low;
    const double hi = scene.bins.back().high;
    const double span = hi > lo ? hi - lo : 1.0;
    std::uint64_t max_count = 0;
    for (const auto& b : scene.bins) max_count = std::max(max_count, b.count);
    const double x_axis = top + plot_h;

    std::string out = fmt::format("<svg height=\"{}\" width=\"{}\" xmlns=\"http://www.w3.org/2000/svg\">\n",
                                  scene.height, scene.width);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\" />\n", scene.width,
                       scene.height);

    for (const auto& b : scene.bins) {
        const double x0 = left + (b.low - lo) / span * plot_w;
        const double x1 = left + (b.high - lo) / span * plot_w;
        const double h = max_count ? plot_h * static_cast<double>(b.count) / static_cast<double>(max_count) : 0.0;
        out += fmt::format("<rect class=\"bar\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" "
                           "fill=\"gray\" stroke=\"black\" stroke-width=\"1\"/>\n",
                           num(x0, 2), num(x_axis - h, 2), num(x1 - x0, 2), num(h, 2));
    }

    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\" stroke-width=\"1\"/>\n",
                       num(left, 2), num(x_axis, 2), num(left + plot_w, 2));
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\" stroke-width=\"1\"/>\n",
                       num(left, 2), num(top, 2), num(x_axis, 2));

    constexpr int ticks = 5;
    for (int i = 0; i < ticks; ++i) {
        const double frac = static_cast<double>(i) / (ticks - 1);
        const double x = left + frac * plot_w;
        out += fmt::format("<line class=\"tick\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\" "
                           "stroke-width=\"1\"/>\n",
                           num(x, 2), num(x_axis, 2), num(x_axis + 5.0, 2));
        out += fmt::format("<text class=\"tick-label\" x=\"{}\" y=\"{}\" font-size=\"11\" "
                           "text-anchor=\"middle\">{}</text>\n",
                           num(x, 2), num(x_axis + 18.0, 2), num(lo + frac * span, 4));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
                       num(left + plot_w / 2.0, 2), num(x_axis + 38.0, 2), escape_xml(scene.x_label));
    out += fmt::format("<text x=\"{0}\" y=\"{1}\" font-size=\"12\" text-anchor=\"middle\" "
                       "transform=\"rotate(-90 {0} {1})\">{2}</text>\n",
                       num(20.0, 2), num(top + plot_h / 2.0, 2), escape_xml(scene.y_label));
    out += fmt::format("<text class=\"caption\" x=\"{}\" y=\"{}\" font-size=\"13\" "
                       "text-anchor=\"middle\">mean = {:.5f}</text>\n",
                       num(left + plot_w / 2.0, 2), num(top / 2.0 + 5.0, 2), scene.mean);
    out += "</svg>\n";
    return out;
}

std::string filename_for_cast(int index) {
    if (index < 0) throw std::invalid_argument("cast index must be non-negative");
    return fmt::format("plot{:02d}.svg", index);
}

} // namespace buffon
