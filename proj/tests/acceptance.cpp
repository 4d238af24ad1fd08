// Acceptance suite: runs every exit criterion at its stated scale and
// tolerance and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "buffon/cli.hpp"
#include "buffon/estimators.hpp"
#include "buffon/oracle.hpp"
#include "buffon/render.hpp"
#include "buffon/sampling.hpp"
#include "oracles.hpp"
#include "svg_check.hpp"

namespace fs = std::filesystem;
using namespace buffon;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwelveOverPi = 12.0 / kPi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = cli::run(args, out, err);
    r.out = out.str() + err.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

double grab(const std::string& text, const std::string& pattern) {
    std::smatch m;
    if (!std::regex_search(text, m, std::regex(pattern))) return std::nan("");
    return std::stod(m[1].str());
}

std::string fmt_double(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

fs::path scratch_dir() {
    const fs::path p = fs::temp_directory_path() / ("buffon_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

Outcome batch_mean_criterion(const fs::path& dir, const std::string& runs, const std::string& trials, double tol,
                             bool check_caption) {
    const fs::path svg = dir / ("hist_" + runs + "_" + trials + ".svg");
    const CliRun r = cli_run({"batch", "--runs", runs, "--trials", trials, "--seed", "7", "--svg", svg.string()});
    const double mean = grab(r.out, R"(mean = ([0-9.]+))");
    const double gap = std::abs(mean - kPi);
    bool pass = r.code == 0 && gap < tol;
    std::string detail = "mean = " + fmt_double("%.6f", mean) + ", |mean - pi| = " + fmt_double("%.2e", gap) +
                         " < " + fmt_double("%.0e", tol);
    if (check_caption) {
        const double caption = grab(slurp(svg), R"(mean = ([0-9.]+)</text>)");
        const bool ok = std::abs(caption - kPi) < tol;
        pass = pass && ok;
        detail += ", histogram caption " + fmt_double("%.5f", caption);
    }
    return {pass, detail};
}

Outcome criterion_full_scale(const fs::path& dir) { return batch_mean_criterion(dir, "1000", "1000000", 1e-3, true); }

Outcome criterion_desk_scale(const fs::path& dir) { return batch_mean_criterion(dir, "100", "100000", 1e-2, false); }

Outcome criterion_constant() {
    const double quad = expected_crossings_quadrature(360, 200);
    const double closed = expected_crossings_closed_form(1.0, 1.0);
    Stream rng({314159, 0});
    const TrialAggregate agg = run_triangle_trials(10'000'000, rng);
    const double n = static_cast<double>(agg.trials);
    const double mc = static_cast<double>(agg.intersections()) / n;
    const double se = std::sqrt((static_cast<double>(*agg.sum_sq_total) - n * mc * mc) / (n - 1.0) / n);
    const bool quad_ok = std::abs(quad - kTwelveOverPi) < 1e-3;
    const bool closed_ok = std::abs(quad - closed) < 1e-3 && std::abs(closed - kTwelveOverPi) < 1e-12;
    const bool mc_ok = std::abs(mc - closed) < 3.0 * se;
    const CliRun v = cli_run({"validate"});
    return {quad_ok && closed_ok && mc_ok && v.code == 0,
            "quadrature " + fmt_double("%.6f", quad) + " (gap " + fmt_double("%.2e", std::abs(quad - kTwelveOverPi)) +
                "), closed form " + fmt_double("%.7f", closed) + ", MC 1e7 " + fmt_double("%.6f", mc) + " (" +
                fmt_double("%.2f", std::abs(mc - closed) / se) + " SE)"};
}

Outcome criterion_needle() {
    Stream rng({4242, 0});
    const NeedleAggregate agg = run_needle_trials(1'000'000, rng, 1.0);
    const double rate = static_cast<double>(agg.hits) / static_cast<double>(agg.trials);
    const double pi = estimate_pi_needle(agg).pi_estimate;
    return {std::abs(rate - 2.0 / kPi) < 0.002 && std::abs(pi - kPi) < 0.01,
            "hit rate " + fmt_double("%.6f", rate) + " (2/pi = 0.636620), pi estimate " + fmt_double("%.6f", pi)};
}

Outcome criterion_equivalence() {
    Stream rng({55, 0});
    int mismatches = 0;
    for (int i = 0; i < 100'000; ++i) {
        const CastSample s = sample_cast(rng, 1.0);
        const Vertices v = make_triangle(kCastCenter, 1.0, s.rotation);
        const GridSpec g(1.0, s.offset_x, s.offset_y);
        if (!(crossings_per_cast(v, g) == oracle_test::brute_force_crossings(v, g))) ++mismatches;
    }
    return {mismatches == 0, "100000 casts, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion_parity_bound() {
    Stream rng({66, 0});
    int checked = 0, violations = 0;
    while (checked < 100'000) {
        const CastSample s = sample_cast(rng, 1.0);
        const Vertices v = make_triangle(kCastCenter, 1.0, s.rotation);
        const GridSpec g(1.0, s.offset_x, s.offset_y);
        if (oracle_test::touches_line(v, g, Axis::X) || oracle_test::touches_line(v, g, Axis::Y)) continue;
        const CrossingTally t = crossings_per_cast(v, g);
        const auto in02 = [](int c) { return c == 0 || c == 2; };
        if (!in02(t.count_x) || !in02(t.count_y) || !(t.total() == 0 || t.total() == 2 || t.total() == 4)) {
            ++violations;
        }
        ++checked;
    }
    return {violations == 0, "100000 non-degenerate casts, " + std::to_string(violations) + " violations"};
}

Outcome criterion_determinism(const fs::path& dir) {
    std::vector<std::string> csvs, svgs;
    bool codes_ok = true;
    int i = 0;
    for (const char* workers : {"1", "8", "1", "8"}) {
        const fs::path csv = dir / ("det" + std::to_string(i) + ".csv");
        const fs::path svg = dir / ("det" + std::to_string(i) + ".svg");
        ++i;
        const CliRun r = cli_run({"batch", "--runs", "16", "--trials", "20000", "--seed", "9", "--workers", workers,
                                  "--csv", csv.string(), "--svg", svg.string()});
        codes_ok = codes_ok && r.code == 0;
        csvs.push_back(slurp(csv));
        svgs.push_back(slurp(svg));
    }
    bool same = codes_ok && !csvs[0].empty();
    for (std::size_t k = 1; k < csvs.size(); ++k) same = same && csvs[k] == csvs[0] && svgs[k] == svgs[0];
    return {same, "4 invocations (workers 1, 8, 1, 8): CSV and SVG " + std::string(same ? "identical" : "differ")};
}

Outcome criterion_convergence() {
    BatchParams p;
    const BatchResult small = run_batch(200, 10'000, 8001, p);
    const BatchResult large = run_batch(200, 40'000, 8002, p);
    const double half = 0.5 * small.stddev;
    const double rel = std::abs(large.stddev - half) / half;
    return {rel <= 0.2, "stddev(1e4) = " + fmt_double("%.3e", small.stddev) + ", stddev(4e4) = " +
                            fmt_double("%.3e", large.stddev) + ", off half by " + fmt_double("%.1f%%", 100.0 * rel)};
}

// Visible line count recomputed by scanning a wide k range.
int expected_red_lines(const Vertices& v, const GridSpec& g) {
    const CastScene scene = make_cast_scene(v, g);
    const Viewport& vp = scene.viewport;
    int n = 0;
    for (long long k = -10; k <= 10; ++k) {
        const double x = g.line(Axis::X, k);
        if (x >= vp.origin.x && x <= vp.origin.x + vp.world_width()) ++n;
        const double y = g.line(Axis::Y, k);
        if (y >= vp.origin.y && y <= vp.origin.y + vp.world_height()) ++n;
    }
    return n;
}

Outcome criterion_render(const fs::path& dir) {
    const fs::path out = dir / "casts";
    const CliRun r = cli_run({"render", "--images", "20", "--seed", "5", "--out", out.string()});
    bool ok = r.code == 0;
    Stream rng({5, 0});
    int files = 0;
    for (int i = 0; i < 20; ++i) {
        const CastSample s = sample_cast(rng, 1.0);
        const Vertices v = make_triangle(kCastCenter, 1.0, s.rotation);
        const GridSpec g(1.0, s.offset_x, s.offset_y);
        char name[32];
        std::snprintf(name, sizeof name, "plot%02d.svg", i);
        const fs::path file = out / name;
        if (!fs::exists(file)) {
            ok = false;
            continue;
        }
        ++files;
        const std::string svg = slurp(file);
        ok = ok && svg_check::well_formed_svg(svg);
        ok = ok && svg_check::count(svg, "stroke=\"black\" stroke-width=\"2\"") == 3;
        ok = ok && svg_check::count(svg, "<rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\" />") == 1;
        ok = ok && svg_check::count(svg, "stroke=\"red\" stroke-width=\"2\"") == expected_red_lines(v, g);
    }
    ok = ok && !fs::exists(out / "plot20.svg");
    return {ok, std::to_string(files) + " files plot00.svg..plot19.svg checked"};
}

} // namespace

int main() {
    const fs::path dir = scratch_dir();
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 full-scale batch (1000 x 1e6)", [&] { return criterion_full_scale(dir); }},
        {"2 desk-scale batch (100 x 1e5)", [&] { return criterion_desk_scale(dir); }},
        {"3 crossings constant 12/pi", criterion_constant},
        {"4 needle baseline", criterion_needle},
        {"5 sorted vs direct crossings", criterion_equivalence},
        {"6 parity and bound", criterion_parity_bound},
        {"7 batch determinism", [&] { return criterion_determinism(dir); }},
        {"8 1/sqrt(N) convergence", criterion_convergence},
        {"9 render contract", [&] { return criterion_render(dir); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %-34s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    fs::remove_all(dir);
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
