#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "calibra/bounds.hpp"
#include "calibra/embedding.hpp"
#include "calibra/euler_integrals.hpp"
#include "calibra/suite.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace calibra;

namespace {

Phase parse_phase(const std::string& s) {
    if (s == "cos") return Phase::cos;
    if (s == "sin") return Phase::sin;
    throw std::invalid_argument("phase must be 'cos' or 'sin'");
}

std::vector<TorusPoint> parse_tuple(const std::vector<std::vector<double>>& pts) {
    std::vector<TorusPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(TorusPoint::from_angles(p));
    return out;
}

PolyDiskPoint parse_polydisk(const std::vector<std::pair<double, double>>& factors) {
    std::vector<DiskPoint> fs;
    fs.reserve(factors.size());
    for (auto [re, im] : factors) fs.emplace_back(re, im);
    return PolyDiskPoint(std::move(fs));
}

py::dict estimate_dict(const MCEstimate& est) {
    py::dict d;
    d["value"] = est.value;
    d["std_error"] = est.std_error;
    d["samples"] = est.samples;
    d["seed"] = est.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Calibration identities on products of hyperbolic planes";

    // hyperbolic plane basics
    m.def(
        "poisson_kernel",
        [](double re, double im, double theta) {
            return poisson_kernel(DiskPoint(re, im), CirclePoint(theta));
        },
        py::arg("re"), py::arg("im"), py::arg("theta"));
    m.def(
        "busemann",
        [](double re, double im, double theta) {
            return busemann(DiskPoint(re, im), CirclePoint(theta));
        },
        py::arg("re"), py::arg("im"), py::arg("theta"));
    m.def("entropy_locally_symmetric", &entropy_locally_symmetric, py::arg("n"));
    m.def(
        "boundary_action",
        [](double a_re, double a_im, double phi, double theta) {
            return boundary_action(DiskAutomorphism(DiskPoint(a_re, a_im), phi), CirclePoint(theta))
                .angle();
        },
        py::arg("a_re"), py::arg("a_im"), py::arg("phi"), py::arg("theta"));
    m.def(
        "boundary_jacobian",
        [](double a_re, double a_im, double phi, double theta) {
            return boundary_jacobian(DiskAutomorphism(DiskPoint(a_re, a_im), phi),
                                     CirclePoint(theta));
        },
        py::arg("a_re"), py::arg("a_im"), py::arg("phi"), py::arg("theta"));

    // cocycle
    m.def(
        "euler_class",
        [](double a, double b, double c) {
            return euler_class(CirclePoint(a), CirclePoint(b), CirclePoint(c));
        },
        py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "cocycle",
        [](const std::vector<std::vector<double>>& pts) {
            const auto v = cocycle(parse_tuple(pts));
            return std::make_pair(v.numerator(), v.denominator());
        },
        py::arg("points"), "Exact value as a (numerator, denominator) pair");
    m.def(
        "coboundary",
        [](const std::vector<std::vector<double>>& pts) {
            const auto v = coboundary(parse_tuple(pts));
            return std::make_pair(v.numerator(), v.denominator());
        },
        py::arg("points"));
    m.def(
        "suitable_permutation_count",
        [](int n) { return suitable_permutations(n).size(); }, py::arg("n"));

    // one-factor integrals
    m.def(
        "euler_marginal",
        [](double b, double c) { return euler_marginal(CirclePoint(b), CirclePoint(c)); },
        py::arg("b"), py::arg("c"));
    m.def(
        "euler_trig_triple",
        [](int k1, const std::string& p1, int k2, const std::string& p2, double amp1, double amp2) {
            return euler_trig_triple({k1, parse_phase(p1), amp1}, {k2, parse_phase(p2), amp2});
        },
        py::arg("k1"), py::arg("phase1"), py::arg("k2"), py::arg("phase2"),
        py::arg("amp1") = 1.0, py::arg("amp2") = 1.0);

    // frames and the 2n-form
    py::class_<Frame>(m, "Frame")
        .def_property_readonly("n", &Frame::n)
        .def_property_readonly("ortho_defect", &Frame::ortho_defect)
        .def("__len__", [](const Frame& f) { return f.functions().size(); });
    m.def("standard_frame", &standard_frame, py::arg("n"));
    m.def("comass_bound", &comass_bound, py::arg("n"));
    m.def("omega_exact", [](const Frame& f) { return omega_exact(f); }, py::arg("frame"));
    m.def(
        "omega_mc",
        [](const Frame& f, std::int64_t samples, std::uint64_t seed) {
            return estimate_dict(omega_mc(f, samples, seed));
        },
        py::arg("frame"), py::arg("samples"), py::arg("seed"));

    m.def(
        "scan_fourier",
        [](int n, int kmax, const std::string& phases) {
            const auto rep = scan_fourier(
                n, kmax, phases == "alternating" ? PhaseSet::alternating : PhaseSet::all);
            py::dict d;
            d["n"] = rep.n;
            d["kmax"] = rep.kmax;
            d["entries_total"] = rep.entries.size();
            d["nonzero_count"] = rep.nonzero_count;
            d["max_pattern_error"] = rep.max_pattern_error;
            d["max_offpattern_value"] = rep.max_offpattern_value;
            d["consistent"] = rep.consistent;
            py::list nonzero;
            for (const auto& e : rep.entries)
                if (std::abs(e.value) > tol_fourier) nonzero.append(e.value);
            d["nonzero_values"] = nonzero;
            return d;
        },
        py::arg("n"), py::arg("kmax"), py::arg("phases") = "all");

    m.def(
        "search",
        [](int n, int kmax, int restarts, std::uint64_t seed) {
            const auto rep = search(n, kmax, restarts, seed);
            py::dict d;
            d["best_value"] = rep.best_value;
            d["theoretical"] = rep.theoretical;
            d["gap"] = rep.gap;
            d["restarts"] = rep.restarts;
            d["iterations"] = rep.iterations;
            d["trace_max"] = rep.trace_max;
            return d;
        },
        py::arg("n"), py::arg("kmax"), py::arg("restarts"), py::arg("seed"));
    m.def(
        "certify_local_max",
        [](int n, int trials, double radius, std::uint64_t seed) {
            const auto rep = certify_local_max(n, trials, radius, seed);
            py::dict d;
            d["pass"] = rep.pass;
            d["max_objective"] = rep.max_objective;
            d["theoretical"] = rep.theoretical;
            return d;
        },
        py::arg("n"), py::arg("trials"), py::arg("radius"), py::arg("seed"));

    // embedding
    m.def(
        "phi0",
        [](const std::vector<std::pair<double, double>>& x, const std::vector<double>& theta) {
            return phi0_evaluate(parse_polydisk(x), TorusPoint::from_angles(theta));
        },
        py::arg("x"), py::arg("theta"));
    m.def(
        "volume_density_ratio",
        [](const std::vector<std::pair<double, double>>& x) {
            return volume_density_ratio(parse_polydisk(x));
        },
        py::arg("x"));

    // bound calculators
    m.def("minvol_bound", &minvol_bound, py::arg("n"), py::arg("vol_g0"));
    m.def(
        "degree_bound",
        [](int n, double h_g, double vol_y, double vol_m) {
            return degree_bound(n, h_g, vol_y, vol_m);
        },
        py::arg("n"), py::arg("h_g"), py::arg("vol_y"), py::arg("vol_m"));
    m.def("curvature_entropy_bound", &curvature_entropy_bound, py::arg("n"));

    // suites
    m.def(
        "run_suite",
        [](const std::string& suite, int n, std::uint64_t seed, const std::string& budget) {
            const auto rep = run_suite(suite, n, seed, budget);
            py::dict d;
            d["suite"] = rep.suite;
            d["overall"] = rep.overall();
            py::list checks;
            for (const auto& c : rep.checks) {
                py::dict jc;
                jc["name"] = c.name;
                jc["pass"] = c.pass;
                jc["value"] = c.value;
                jc["expected"] = c.expected;
                jc["tolerance"] = c.tolerance;
                checks.append(jc);
            }
            d["checks"] = checks;
            return d;
        },
        py::arg("suite"), py::arg("n"), py::arg("seed") = 42, py::arg("budget") = "quick");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
