#include "buffon/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

namespace buffon {

EstimateSummary estimate_pi_triangle(const TrialAggregate& agg) {
    const std::uint64_t c = agg.intersections();
    if (c == 0) throw DegenerateSample("no intersections: pi estimate undefined");
    EstimateSummary s;
    s.trials = agg.trials;
    s.intersections = c;
    s.pi_estimate = 12.0 * static_cast<double>(agg.trials) / static_cast<double>(c);
    if (agg.sum_sq_total && agg.trials > 1) {
        // Delta method on pi = 12 / mean(per-cast total).
        const double n = static_cast<double>(agg.trials);
        const double mean = static_cast<double>(c) / n;
        const double var = std::max(0.0, (static_cast<double>(*agg.sum_sq_total) - n * mean * mean) / (n - 1.0));
        s.standard_error = s.pi_estimate * std::sqrt(var) / (mean * std::sqrt(n));
    }
    return s;
}

EstimateSummary estimate_pi_needle(const NeedleAggregate& agg) {
    if (agg.hits == 0) throw DegenerateSample("no needle hits: pi estimate undefined");
    const double n = static_cast<double>(agg.trials);
    const double p = static_cast<double>(agg.hits) / n;
    EstimateSummary s;
    s.trials = agg.trials;
    s.intersections = agg.hits;
    s.pi_estimate = 2.0 * agg.ratio / p;
    s.standard_error = s.pi_estimate * std::sqrt(p * (1.0 - p) / n) / p;
    return s;
}

Summary summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("cannot summarize an empty list");
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    Summary s;
    s.mean = sum / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / (n - 1.0));
    }
    s.standard_error = s.stddev / std::sqrt(n);
    s.ci_low = s.mean - 1.96 * s.standard_error;
    s.ci_high = s.mean + 1.96 * s.standard_error;
    return s;
}

std::vector<HistogramBin> make_histogram(std::span<const double> values, std::size_t bins) {
    if (values.empty()) throw std::invalid_argument("cannot bin an empty list");
    if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (!(hi > lo)) {
        const double pad = std::max(1e-9, std::abs(lo) * 1e-9);
        lo -= pad;
        hi += pad;
    }
    const double width = (hi - lo) / static_cast<double>(bins);
    std::vector<HistogramBin> out(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        out[i].low = lo + width * static_cast<double>(i);
        out[i].high = i + 1 == bins ? hi : lo + width * static_cast<double>(i + 1);
    }
    for (double v : values) {
        auto idx = static_cast<std::size_t>((v - lo) / width);
        out[std::min(idx, bins - 1)].count++;
    }
    return out;
}

double run_single_estimate(std::uint64_t trials, RngConfig config, const BatchParams& params) {
    Stream rng(config);
    if (params.method == Method::Triangle) {
        return estimate_pi_triangle(run_triangle_trials(trials, rng, params.side, params.spacing)).pi_estimate;
    }
    return estimate_pi_needle(run_needle_trials(trials, rng, params.ratio)).pi_estimate;
}

BatchResult run_batch(std::uint64_t runs, std::uint64_t trials, std::uint64_t seed, const BatchParams& params) {
    if (runs == 0) throw std::invalid_argument("batch needs at least one run");
    if (trials == 0) throw std::invalid_argument("trial count must be at least 1");
    if (params.bins == 0) throw std::invalid_argument("histogram needs at least one bin");
    if (params.method == Method::Triangle) {
        require_triangle_config(trials, params.side, params.spacing);
    } else {
        require_needle_config(trials, params.ratio);
    }

    BatchResult result;
    result.runs = runs;
    result.trials_per_run = trials;
    result.seed = seed;
    result.estimates.assign(runs, 0.0);
    std::vector<std::exception_ptr> errors(runs);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t k = next++; k < runs; k = next++) {
            try {
                result.estimates[k] = run_single_estimate(trials, {seed, k}, params);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };

    unsigned workers = params.workers ? params.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, runs));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    for (std::uint64_t k = 0; k < runs; ++k) {
        if (!errors[k]) continue;
        try {
            std::rethrow_exception(errors[k]);
        } catch (const DegenerateSample& e) {
            throw DegenerateSample("run " + std::to_string(k) + ": " + e.what(), k);
        }
    }

    result.summary = summarize(result.estimates);
    result.mean = result.summary.mean;
    result.stddev = result.summary.stddev;
    result.histogram = make_histogram(result.estimates, params.bins);
    return result;
}

} // namespace buffon
