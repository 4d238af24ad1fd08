#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "buffon/estimators.hpp"
#include "buffon/geometry.hpp"
#include "buffon/oracle.hpp"
#include "buffon/render.hpp"
#include "buffon/sampling.hpp"

namespace py = pybind11;
using namespace buffon;

namespace {

py::list vertices_to_list(const Vertices& v) {
    py::list out;
    for (const Point& p : v.points) out.append(py::make_tuple(p.x, p.y));
    return out;
}

Vertices vertices_from(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() != 3) throw std::invalid_argument("expected three vertices");
    return Vertices{{{{pts[0].first, pts[0].second}, {pts[1].first, pts[1].second}, {pts[2].first, pts[2].second}}}};
}

Method parse_method(const std::string& m) {
    if (m == "triangle") return Method::Triangle;
    if (m == "needle") return Method::Needle;
    throw std::invalid_argument("method must be 'triangle' or 'needle'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Buffon triangle and needle simulations of pi";

    py::register_exception<UnsupportedConfiguration>(m, "UnsupportedConfiguration", PyExc_ValueError);
    py::register_exception<DegenerateSample>(m, "DegenerateSample", PyExc_ArithmeticError);

    m.def(
        "make_triangle",
        [](std::pair<double, double> center, double side, double rotation) {
            return vertices_to_list(make_triangle({center.first, center.second}, side, rotation));
        },
        py::arg("center"), py::arg("side"), py::arg("rotation"));

    m.def(
        "crossings_per_cast",
        [](const std::vector<std::pair<double, double>>& vertices, double spacing, double offset_x, double offset_y) {
            const CrossingTally t = crossings_per_cast(vertices_from(vertices), GridSpec(spacing, offset_x, offset_y));
            return py::make_tuple(t.count_x, t.count_y);
        },
        py::arg("vertices"), py::arg("spacing"), py::arg("offset_x"), py::arg("offset_y"));

    m.def(
        "sample_casts",
        [](std::uint64_t count, std::uint64_t seed, std::uint64_t stream, double spacing) {
            Stream rng({seed, stream});
            py::list out;
            for (std::uint64_t i = 0; i < count; ++i) {
                const CastSample s = sample_cast(rng, spacing);
                out.append(py::make_tuple(s.rotation, s.offset_x, s.offset_y));
            }
            return out;
        },
        py::arg("count"), py::arg("seed"), py::arg("stream") = 0, py::arg("spacing") = 1.0);

    m.def(
        "estimate",
        [](const std::string& method, std::uint64_t trials, std::uint64_t seed, double ratio) {
            py::gil_scoped_release release;
            Stream rng({seed, 0});
            EstimateSummary s;
            std::uint64_t cx = 0, cy = 0;
            if (parse_method(method) == Method::Triangle) {
                const TrialAggregate agg = run_triangle_trials(trials, rng);
                cx = agg.count_x_total;
                cy = agg.count_y_total;
                s = estimate_pi_triangle(agg);
            } else {
                s = estimate_pi_needle(run_needle_trials(trials, rng, ratio));
            }
            py::gil_scoped_acquire acquire;
            py::dict d;
            d["method"] = method;
            d["trials"] = s.trials;
            d["seed"] = seed;
            d["intersections"] = s.intersections;
            d["count_x"] = cx;
            d["count_y"] = cy;
            d["pi_estimate"] = s.pi_estimate;
            d["standard_error"] = s.standard_error ? py::cast(*s.standard_error) : py::none();
            return d;
        },
        py::arg("method") = "triangle", py::arg("trials") = 1'000'000, py::arg("seed") = 0, py::arg("ratio") = 1.0);

    m.def(
        "run_batch",
        [](std::uint64_t runs, std::uint64_t trials, std::uint64_t seed, const std::string& method, double ratio,
           std::size_t bins, unsigned workers) {
            BatchParams p;
            p.method = parse_method(method);
            p.ratio = ratio;
            p.bins = bins;
            p.workers = workers;
            BatchResult b;
            {
                py::gil_scoped_release release;
                b = run_batch(runs, trials, seed, p);
            }
            py::list hist;
            for (const auto& bin : b.histogram) hist.append(py::make_tuple(bin.low, bin.high, bin.count));
            py::dict d;
            d["runs"] = b.runs;
            d["trials_per_run"] = b.trials_per_run;
            d["seed"] = b.seed;
            d["estimates"] = b.estimates;
            d["mean"] = b.mean;
            d["stddev"] = b.stddev;
            d["ci"] = py::make_tuple(b.summary.ci_low, b.summary.ci_high);
            d["histogram"] = hist;
            return d;
        },
        py::arg("runs"), py::arg("trials"), py::arg("seed"), py::arg("method") = "triangle", py::arg("ratio") = 1.0,
        py::arg("bins") = 40, py::arg("workers") = 0);

    m.def("expected_crossings_quadrature",
          py::overload_cast<int, int>(&expected_crossings_quadrature), py::arg("theta_points"),
          py::arg("offset_points"));
    m.def("mean_width_identity", &mean_width_identity, py::arg("side"));
    m.def("expected_crossings_closed_form", &expected_crossings_closed_form, py::arg("side"), py::arg("spacing"));

    m.def(
        "render_cast",
        [](const std::vector<std::pair<double, double>>& vertices, double spacing, double offset_x, double offset_y) {
            return render_cast(make_cast_scene(vertices_from(vertices), GridSpec(spacing, offset_x, offset_y)));
        },
        py::arg("vertices"), py::arg("spacing"), py::arg("offset_x"), py::arg("offset_y"));
    m.def("filename_for_cast", &filename_for_cast, py::arg("index"));
}
