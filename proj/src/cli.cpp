#include "buffon/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "buffon/oracle.hpp"
#include "buffon/render.hpp"
#include "buffon/sampling.hpp"

namespace buffon::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct EstimateOptions {
    std::string method = "triangle";
    std::uint64_t trials = 1'000'000;
    std::optional<std::uint64_t> seed;
    double ratio = 1.0;
    std::string json_path;
};

struct BatchOptions {
    std::string method = "triangle";
    std::uint64_t runs = 1000;
    std::uint64_t trials = 1'000'000;
    std::optional<std::uint64_t> seed;
    double ratio = 1.0;
    std::size_t bins = 40;
    std::string csv_path;
    std::string svg_path;
    unsigned workers = 0;
};

struct RenderOptions {
    int images = 20;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
};

struct ValidateOptions {
    std::vector<int> resolution{360, 200};
    double tolerance = 1e-3;
    std::uint64_t mc_trials = 0;
    std::uint64_t seed = 1;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << content;
    if (!f.flush()) throw std::runtime_error("failed writing " + path.string());
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, std::ostream& out) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
    fmt::print(out, "generated seed = {} (pass --seed {} to reproduce)\n", s, s);
    return s;
}

int cmd_estimate(const EstimateOptions& o, std::ostream& out) {
    const std::uint64_t seed = resolve_seed(o.seed, out);
    Stream rng({seed, 0});
    json report{{"method", o.method}, {"trials", o.trials}, {"seed", seed}};

    if (o.method == "triangle") {
        const TrialAggregate agg = run_triangle_trials(o.trials, rng);
        const EstimateSummary s = estimate_pi_triangle(agg);
        const double n = static_cast<double>(o.trials);
        fmt::print(out, "seed = {}\n", seed);
        fmt::print(out, "count_x = {}\tcount_x/trials = {:.6f}\n", agg.count_x_total, agg.count_x_total / n);
        fmt::print(out, "count_y = {}\tcount_y/trials = {:.6f}\n", agg.count_y_total, agg.count_y_total / n);
        fmt::print(out, "\npi estimate = {:.6f}\n", s.pi_estimate);
        if (s.standard_error) fmt::print(out, "standard error = {:.6f}\n", *s.standard_error);
        report["count_x"] = agg.count_x_total;
        report["count_y"] = agg.count_y_total;
        report["intersections"] = agg.intersections();
        report["pi_estimate"] = s.pi_estimate;
        report["standard_error"] = s.standard_error ? json(*s.standard_error) : json(nullptr);
    } else {
        const NeedleAggregate agg = run_needle_trials(o.trials, rng, o.ratio);
        const EstimateSummary s = estimate_pi_needle(agg);
        fmt::print(out, "seed = {}\n", seed);
        fmt::print(out, "hits = {}\thits/trials = {:.6f}\n", agg.hits,
                   static_cast<double>(agg.hits) / static_cast<double>(o.trials));
        fmt::print(out, "\npi estimate = {:.6f}\n", s.pi_estimate);
        fmt::print(out, "standard error = {:.6f}\n", s.standard_error.value_or(0.0));
        report["ratio"] = o.ratio;
        report["hits"] = agg.hits;
        report["count_x"] = nullptr;
        report["count_y"] = nullptr;
        report["pi_estimate"] = s.pi_estimate;
        report["standard_error"] = s.standard_error ? json(*s.standard_error) : json(nullptr);
    }

    if (!o.json_path.empty()) write_file(o.json_path, report.dump(2) + "\n");
    return kExitOk;
}

int cmd_batch(const BatchOptions& o, std::ostream& out) {
    const std::uint64_t seed = resolve_seed(o.seed, out);
    BatchParams params;
    params.method = o.method == "needle" ? Method::Needle : Method::Triangle;
    params.ratio = o.ratio;
    params.bins = o.bins;
    params.workers = o.workers;
    const BatchResult b = run_batch(o.runs, o.trials, seed, params);

    fmt::print(out, "method = {} runs = {} trials = {} seed = {}\n", o.method, b.runs, b.trials_per_run, seed);
    fmt::print(out, "mean = {:.6f} stddev = {:.6f} stderr = {:.6f} 95% CI = [{:.6f}, {:.6f}]\n", b.mean, b.stddev,
               b.summary.standard_error, b.summary.ci_low, b.summary.ci_high);
    if (!o.csv_path.empty()) write_file(o.csv_path, batch_csv(b));
    if (!o.svg_path.empty()) write_file(o.svg_path, render_histogram(make_histogram_scene(b)));
    return kExitOk;
}

int cmd_render(const RenderOptions& o, std::ostream& out) {
    const std::uint64_t seed = resolve_seed(o.seed, out);
    const fs::path dir(o.out_dir);
    if (o.images > 0) {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec || !fs::is_directory(dir)) throw std::runtime_error("cannot use output directory " + dir.string());
    }
    Stream rng({seed, 0});
    for (int i = 0; i < o.images; ++i) {
        const CastSample s = sample_cast(rng, 1.0);
        const Vertices v = make_triangle(kCastCenter, 1.0, s.rotation);
        const GridSpec grid(1.0, s.offset_x, s.offset_y);
        const CrossingTally t = crossings_per_cast(v, grid);
        const std::string name = filename_for_cast(i);
        write_file(dir / name, render_cast(make_cast_scene(v, grid)));
        fmt::print(out, "{}\tcount_x = {}\tcount_y = {}\n", name, t.count_x, t.count_y);
    }
    return kExitOk;
}

int cmd_validate(const ValidateOptions& o, std::ostream& out) {
    const int n_theta = o.resolution.at(0);
    const int n_offset = o.resolution.size() > 1 ? o.resolution[1] : o.resolution[0];
    const double quad = expected_crossings_quadrature(n_theta, n_offset);
    const double closed = expected_crossings_closed_form(1.0, 1.0);
    const double gap = std::abs(quad - closed);
    bool pass = gap < o.tolerance;

    fmt::print(out, "quadrature ({} x {} x {}) = {:.7f}\n", n_theta, n_offset, n_offset, quad);
    fmt::print(out, "closed form 12/pi = {:.7f}\n", closed);
    fmt::print(out, "gap = {:.3e} tolerance = {:.3e} {}\n", gap, o.tolerance, gap < o.tolerance ? "PASS" : "FAIL");

    if (o.mc_trials > 0) {
        Stream rng({o.seed, 0});
        const TrialAggregate agg = run_triangle_trials(o.mc_trials, rng);
        const double n = static_cast<double>(agg.trials);
        const double mean = static_cast<double>(agg.intersections()) / n;
        const double var = (static_cast<double>(agg.sum_sq_total.value_or(0)) - n * mean * mean) / (n - 1.0);
        const double se = std::sqrt(std::max(0.0, var) / n);
        const double z = se > 0.0 ? std::abs(mean - closed) / se : 0.0;
        const bool mc_pass = z < 3.0;
        fmt::print(out, "monte carlo ({} trials, seed {}) = {:.7f} stderr = {:.3e} z = {:.2f} {}\n", agg.trials,
                   o.seed, mean, se, z, mc_pass ? "PASS" : "FAIL");
        pass = pass && mc_pass;
    }
    fmt::print(out, "{}\n", pass ? "PASS" : "FAIL");
    return pass ? kExitOk : kExitFailure;
}

} // namespace

std::string batch_csv(const BatchResult& batch) {
    std::string s = "run,pi_estimate\n";
    for (std::size_t k = 0; k < batch.estimates.size(); ++k) {
        s += fmt::format("{},{:.17g}\n", k, batch.estimates[k]);
    }
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monte Carlo estimation of pi by casting an equilateral triangle onto a square grid", "buffon"};
    app.require_subcommand(1);

    const std::vector<std::string> methods{"triangle", "needle"};

    EstimateOptions est;
    auto* estimate = app.add_subcommand("estimate", "Run one simulation and print the pi estimate");
    estimate->add_option("--method", est.method, "triangle or needle")->check(CLI::IsMember(methods));
    estimate->add_option("--trials", est.trials, "number of casts")->check(CLI::PositiveNumber);
    estimate->add_option("--seed", est.seed, "64-bit seed (generated and printed when absent)");
    estimate->add_option("--ratio", est.ratio, "needle length over plank width, in (0, 1]")
        ->check(CLI::Range(0.0, 1.0));
    estimate->add_option("--json", est.json_path, "write a JSON report to this path");

    BatchOptions bat;
    auto* batch = app.add_subcommand("batch", "Repeat the simulation over independent streams");
    batch->add_option("--method", bat.method, "triangle or needle")->check(CLI::IsMember(methods));
    batch->add_option("--runs", bat.runs, "number of runs")->check(CLI::PositiveNumber);
    batch->add_option("--trials", bat.trials, "casts per run")->check(CLI::PositiveNumber);
    batch->add_option("--seed", bat.seed, "64-bit seed (generated and printed when absent)");
    batch->add_option("--ratio", bat.ratio, "needle ratio, in (0, 1]")->check(CLI::Range(0.0, 1.0));
    batch->add_option("--bins", bat.bins, "histogram bins")->check(CLI::PositiveNumber);
    batch->add_option("--csv", bat.csv_path, "write per-run estimates as CSV");
    batch->add_option("--svg", bat.svg_path, "write the histogram as SVG");
    batch->add_option("--workers", bat.workers, "worker threads (0 = available parallelism)");

    RenderOptions ren;
    auto* render = app.add_subcommand("render", "Write SVG images of sampled casts");
    render->add_option("--images", ren.images, "number of casts to draw")->check(CLI::NonNegativeNumber);
    render->add_option("--seed", ren.seed, "64-bit seed (generated and printed when absent)");
    render->add_option("--out", ren.out_dir, "output directory");

    ValidateOptions val;
    auto* validate = app.add_subcommand("validate", "Check the crossings-per-cast constant by quadrature");
    validate->add_option("--resolution", val.resolution, "theta points and offset points (one value sets both)")
        ->expected(1, 2)
        ->check(CLI::Range(8, 100000));
    validate->add_option("--tolerance", val.tolerance, "allowed gap between quadrature and 12/pi")
        ->check(CLI::PositiveNumber);
    validate->add_option("--mc-trials", val.mc_trials, "also run a Monte Carlo check with this many casts");
    validate->add_option("--seed", val.seed, "seed for the Monte Carlo check");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }
    if (est.ratio <= 0.0 || bat.ratio <= 0.0) {
        err << "error: --ratio must lie in (0, 1]\n";
        return kExitUsage;
    }

    try {
        if (*estimate) return cmd_estimate(est, out);
        if (*batch) return cmd_batch(bat, out);
        if (*render) return cmd_render(ren, out);
        if (*validate) return cmd_validate(val, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace buffon::cli
