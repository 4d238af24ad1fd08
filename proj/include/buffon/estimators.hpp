#pragma once

// Trial loops, pi estimates, and the multi-run batch driver.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "buffon/errors.hpp"
#include "buffon/geometry.hpp"
#include "buffon/sampling.hpp"

namespace buffon {

// Crossing totals of a triangle run. sum_sq_total is the sum over casts of
// (count_x + count_y)^2; when present it enables a standard error.
struct TrialAggregate {
    std::uint64_t trials = 0;
    std::uint64_t count_x_total = 0;
    std::uint64_t count_y_total = 0;
    std::optional<std::uint64_t> sum_sq_total;

    std::uint64_t intersections() const { return count_x_total + count_y_total; }
};

struct NeedleAggregate {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double ratio = 1.0;
};

struct EstimateSummary {
    double pi_estimate = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t intersections = 0; // hits for the needle
    std::optional<double> standard_error;
};

// Casts are placed at this fixed center; the grid offsets carry the randomness.
inline constexpr Point kCastCenter{0.0, 0.0};

inline void require_triangle_config(std::uint64_t n, double side, double spacing) {
    if (n == 0) throw std::invalid_argument("trial count must be at least 1");
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw std::invalid_argument("grid spacing must be positive and finite");
    }
    if (side != spacing) {
        throw UnsupportedConfiguration("triangle method requires side == spacing");
    }
}

template <UniformSource S>
TrialAggregate run_triangle_trials(std::uint64_t n, S& rng, double side = 1.0, double spacing = 1.0) {
    require_triangle_config(n, side, spacing);
    std::uint64_t cx = 0, cy = 0, sq = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const CastSample s = sample_cast(rng, spacing);
        const Vertices v = make_triangle(kCastCenter, side, s.rotation);
        const CrossingTally t = crossings_per_cast(v, GridSpec(spacing, s.offset_x, s.offset_y));
        cx += static_cast<std::uint64_t>(t.count_x);
        cy += static_cast<std::uint64_t>(t.count_y);
        const auto total = static_cast<std::uint64_t>(t.total());
        sq += total * total;
    }
    return {n, cx, cy, sq};
}

// pi = 12 * trials / intersections, valid for side == spacing.
EstimateSummary estimate_pi_triangle(const TrialAggregate& agg);

inline void require_needle_config(std::uint64_t n, double ratio) {
    if (n == 0) throw std::invalid_argument("trial count must be at least 1");
    if (!(ratio > 0.0 && ratio <= 1.0)) {
        throw std::invalid_argument("needle ratio must lie in (0, 1]");
    }
}

// A hit: the needle of length ratio*L, whose center sits at distance d in
// [0, L/2) from the nearest seam and which makes angle a in [0, pi) with the
// seams, satisfies (ratio/2) * sin(a) >= d. Spacing is normalized to 1.
inline bool needle_hits(double ratio, double distance, double angle) {
    return 0.5 * ratio * std::sin(angle) >= distance;
}

template <UniformSource S>
NeedleAggregate run_needle_trials(std::uint64_t n, S& rng, double ratio = 1.0) {
    require_needle_config(n, ratio);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double distance = 0.5 * rng.next_double();
        const double angle = detail::scale_half_open(rng.next_double(), std::numbers::pi);
        if (needle_hits(ratio, distance, angle)) ++hits;
    }
    return {n, hits, ratio};
}

// pi = 2 * ratio * trials / hits, with a binomial standard error.
EstimateSummary estimate_pi_needle(const NeedleAggregate& agg);

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;         // unbiased; 0 for a single value
    double standard_error = 0.0; // stddev / sqrt(count)
    double ci_low = 0.0;         // mean -/+ 1.96 standard errors
    double ci_high = 0.0;
};

Summary summarize(std::span<const double> values);

struct HistogramBin {
    double low = 0.0;
    double high = 0.0;
    std::uint64_t count = 0;
};

// Equal-width bins over [min, max] of the values; the maximum lands in the
// last bin. A zero-width range is widened symmetrically.
std::vector<HistogramBin> make_histogram(std::span<const double> values, std::size_t bins);

enum class Method { Triangle, Needle };

struct BatchParams {
    Method method = Method::Triangle;
    double side = 1.0;    // triangle
    double spacing = 1.0; // triangle
    double ratio = 1.0;   // needle
    std::size_t bins = 40;
    unsigned workers = 0; // 0 = hardware concurrency
};

struct BatchResult {
    std::uint64_t runs = 0;
    std::uint64_t trials_per_run = 0;
    std::uint64_t seed = 0;
    std::vector<double> estimates; // indexed by run
    double mean = 0.0;
    double stddev = 0.0;
    Summary summary;
    std::vector<HistogramBin> histogram;
};

// Run k draws from stream (seed, k). The result depends only on
// (runs, trials, seed, params) and never on the worker count. A degenerate
// run is reported as DegenerateSample carrying the lowest failing run index.
BatchResult run_batch(std::uint64_t runs, std::uint64_t trials, std::uint64_t seed,
                      const BatchParams& params = {});

// One run of the batch, usable on its own.
double run_single_estimate(std::uint64_t trials, RngConfig config, const BatchParams& params);

} // namespace buffon
