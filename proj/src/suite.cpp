#include "calibra/suite.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "calibra/bounds.hpp"
#include "calibra/embedding.hpp"
#include "calibra/euler_integrals.hpp"

namespace calibra {

namespace {

struct Budget {
    std::int64_t mc_samples;
    int scan_kmax_n1;
    int restarts;
    int certify_trials;
    int n_limit;
};

Budget budget_profile(const std::string& name) {
    if (name == "quick") return {100000, 2, 10, 200, 2};
    if (name == "full") return {10000000, 3, 50, 1000, 3};
    throw std::invalid_argument("run_suite: budget must be 'quick' or 'full'");
}

using Clock = std::chrono::steady_clock;

class Recorder {
public:
    Recorder(VerificationReport& report, std::uint64_t seed) : report_(report), seed_(seed) {}

    template <typename Fn>
    void check(const std::string& name, double expected, double tolerance, Fn&& fn) {
        CheckRecord rec;
        rec.name = name;
        rec.expected = expected;
        rec.tolerance = tolerance;
        rec.seed = seed_;
        const auto t0 = Clock::now();
        try {
            rec.value = fn(rec);
            rec.pass = std::abs(rec.value - expected) <= tolerance;
        } catch (const std::exception& e) {
            rec.pass = false;
            rec.note = std::string("exception: ") + e.what();
        }
        rec.runtime_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report_.checks.push_back(std::move(rec));
    }

private:
    VerificationReport& report_;
    std::uint64_t seed_;
};

TorusPoint random_torus_point(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, two_pi);
    std::vector<double> a(static_cast<std::size_t>(n));
    for (auto& x : a) x = u(rng);
    return TorusPoint::from_angles(a);
}

std::vector<TorusPoint> random_tuple(std::mt19937_64& rng, int n, int count) {
    std::vector<TorusPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pts.push_back(random_torus_point(rng, n));
    return pts;
}

DiskAutomorphism random_automorphism(std::mt19937_64& rng, double rmax = 0.9) {
    std::uniform_real_distribution<double> ur(0.0, rmax), ua(0.0, two_pi);
    const double r = ur(rng), arg = ua(rng), phi = ua(rng);
    return DiskAutomorphism(DiskPoint(std::polar(r, arg)), phi);
}

ProductAutomorphism random_product(std::mt19937_64& rng, int n, double rmax = 0.9) {
    std::vector<DiskAutomorphism> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parts.push_back(random_automorphism(rng, rmax));
    return ProductAutomorphism(std::move(parts));
}

PolyDiskPoint random_polydisk(std::mt19937_64& rng, int n, double rmax) {
    std::uniform_real_distribution<double> ur(0.0, rmax), ua(0.0, two_pi);
    std::vector<DiskPoint> fs;
    fs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) fs.push_back(DiskPoint(std::polar(ur(rng), ua(rng))));
    return PolyDiskPoint(std::move(fs));
}

void cocycle_checks(Recorder& rec, int n, std::uint64_t seed) {
    rec.check("alternation_exact", 0.0, 0.0, [&](CheckRecord& r) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, 2 * n);
        int failures = 0;
        for (int t = 0; t < 1000; ++t) {
            auto pts = random_tuple(rng, n, 2 * n + 1);
            int i = pick(rng), j = pick(rng);
            if (i == j) j = (j + 1) % (2 * n + 1);
            auto swapped = pts;
            std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
            if (!(cocycle(swapped) == -cocycle(pts))) ++failures;
        }
        r.note = "1000 random tuples, random transpositions";
        return static_cast<double>(failures);
    });

    rec.check("coboundary_zero", 0.0, 0.0, [&](CheckRecord& r) {
        std::mt19937_64 rng(seed + 1);
        int failures = 0;
        for (int t = 0; t < 1000; ++t)
            if (!coboundary(random_tuple(rng, n, 2 * n + 2)).is_zero()) ++failures;
        r.note = "1000 random (2n+2)-tuples";
        return static_cast<double>(failures);
    });

    rec.check("invariance_exact", 0.0, 0.0, [&](CheckRecord& r) {
        std::mt19937_64 rng(seed + 2);
        int failures = 0;
        for (int t = 0; t < 100; ++t) {
            auto g = random_product(rng, n);
            if (!invariance_residual(g, random_tuple(rng, n, 2 * n + 1)).is_zero()) ++failures;
        }
        r.note = "100 random (g, tuple) pairs";
        return static_cast<double>(failures);
    });

    rec.check("suitable_count", static_cast<double>((1 << n) * (2 * n + 1)), 0.0,
              [&](CheckRecord&) {
                  return static_cast<double>(suitable_permutations(n).size());
              });

    rec.check("cocycle_bound", 0.0, 0.0, [&](CheckRecord& r) {
        std::mt19937_64 rng(seed + 3);
        int violations = 0;
        const ExactRational one(1);
        for (int t = 0; t < 200; ++t) {
            const auto c = cocycle(random_tuple(rng, n, 2 * n + 1));
            if (!(c.abs() <= one)) ++violations;
        }
        r.note = "|C| <= 1 on 200 random tuples";
        return static_cast<double>(violations);
    });

    if (n == 1) {
        rec.check("euler_degeneration", 0.0, 0.0, [&](CheckRecord& r) {
            std::mt19937_64 rng(seed + 4);
            int failures = 0;
            for (int t = 0; t < 1000; ++t) {
                auto pts = random_tuple(rng, 1, 3);
                const int e = euler_class(pts[0][0], pts[1][0], pts[2][0]);
                if (!(cocycle(pts) == ExactRational(e))) ++failures;
            }
            r.note = "C == e on 1000 random triples";
            return static_cast<double>(failures);
        });
    }
}

void fourier_checks(Recorder& rec, int n, std::uint64_t seed, const Budget& budget) {
    rec.check("triple_matched_pairs", 0.0, 1e-12, [&](CheckRecord& r) {
        double worst = 0.0;
        for (int k = 1; k <= 8; ++k) {
            const double v = euler_trig_triple({k, Phase::cos, 1.0}, {k, Phase::sin, 1.0});
            worst = std::max(worst, std::abs(v - 1.0 / (two_pi * k)));
        }
        r.note = "value 1/(2 pi k), k = 1..8";
        return worst;
    });

    rec.check("triple_frequency_selection", 0.0, 1e-12, [&](CheckRecord& r) {
        double worst = 0.0;
        for (int k1 = 1; k1 <= 4; ++k1)
            for (int k2 = 1; k2 <= 4; ++k2)
                for (Phase p1 : {Phase::cos, Phase::sin})
                    for (Phase p2 : {Phase::cos, Phase::sin}) {
                        if (k1 == k2 && p1 != p2) continue;
                        worst = std::max(worst,
                                         std::abs(euler_trig_triple({k1, p1, 1.0}, {k2, p2, 1.0})));
                    }
        r.note = "zero off matched frequency/phase";
        return worst;
    });

    rec.check("triple_scaling_law", 0.0, 1e-12, [&](CheckRecord&) {
        const double base = euler_trig_triple({1, Phase::cos, 1.0}, {1, Phase::sin, 1.0});
        double worst = 0.0;
        for (int k = 2; k <= 8; ++k)
            worst = std::max(worst, std::abs(k * euler_trig_triple({k, Phase::cos, 1.0},
                                                                   {k, Phase::sin, 1.0}) -
                                             base));
        return worst;
    });

    rec.check("marginal_vs_mc", 0.0, 3.0, [&](CheckRecord& r) {
        std::mt19937_64 rng(seed + 10);
        std::uniform_real_distribution<double> u(0.0, two_pi);
        const std::int64_t samples = std::min<std::int64_t>(budget.mc_samples, 100000);
        double worst_sigmas = 0.0;
        for (int t = 0; t < 5; ++t) {
            const CirclePoint b(u(rng)), c(u(rng));
            const Integrand f = [b, c](std::span<const double> a) {
                return static_cast<double>(euler_class(CirclePoint(a[0]), b, c));
            };
            const MCEstimate est = mc_integrate(f, 1, samples, seed + static_cast<std::uint64_t>(t));
            const double sigma = std::max(est.std_error, 1e-12);
            worst_sigmas = std::max(worst_sigmas, std::abs(est.value - euler_marginal(b, c)) / sigma);
        }
        r.note = "closed form within 3 sigma of MC, 5 random (b, c)";
        return worst_sigmas;
    });

    rec.check("scan_consistency", 0.0, 0.0, [&](CheckRecord& r) {
        ScanReport scan;
        if (n == 1) {
            scan = scan_fourier(1, budget.scan_kmax_n1, PhaseSet::all);
        } else {
            scan = n == 2 && budget.n_limit >= 3
                       ? scan_fourier(2, 2, PhaseSet::alternating)
                       : scan_fourier(2, 1, PhaseSet::all);
        }
        std::set<std::string> magnitudes;
        for (const auto& e : scan.entries)
            if (std::abs(e.value) > tol_fourier)
                magnitudes.insert(std::to_string(std::abs(e.value)));
        std::string values;
        for (const auto& v : magnitudes) values += (values.empty() ? "" : ", ") + v;
        r.note = "nonzero=" + std::to_string(scan.nonzero_count) + " values {" + values +
                 "} pattern_err=" + std::to_string(scan.max_pattern_error) +
                 " offpattern=" + std::to_string(scan.max_offpattern_value);
        return scan.consistent ? 0.0 : 1.0;
    });
}

void comass_checks(Recorder& rec, int n, std::uint64_t seed, const Budget& budget) {
    rec.check("omega_exact_standard", comass_bound(n), 1e-12, [&](CheckRecord&) {
        return omega_exact(standard_frame(n));
    });

    if (n <= 2) {
        rec.check("omega_mc_standard", 0.0, 3.0, [&](CheckRecord& r) {
            const std::int64_t samples = n == 1 ? std::min<std::int64_t>(budget.mc_samples, 1000000)
                                                : budget.mc_samples;
            const MCEstimate est = omega_mc(standard_frame(n), samples, seed + 20);
            r.note = "samples=" + std::to_string(est.samples);
            return std::abs(est.value - comass_bound(n)) / std::max(est.std_error, 1e-15);
        });
    }

    const int kmax = budget.n_limit >= 3 ? 3 : 2;
    SearchReport sr;
    rec.check("search_gap", 0.0, 1e-6, [&](CheckRecord& r) {
        sr = search(n, kmax, budget.restarts, seed + 21);
        r.note = "restarts=" + std::to_string(sr.restarts) +
                 " iterations=" + std::to_string(sr.iterations);
        return std::abs(sr.gap);
    });

    rec.check("search_soundness", 0.0, tol_comass, [&](CheckRecord& r) {
        r.note = "trace max never above the theoretical comass";
        return std::max(0.0, sr.trace_max - sr.theoretical);
    });

    rec.check("certify_local_max", 1.0, 0.0, [&](CheckRecord& r) {
        const auto lm = certify_local_max(n, budget.certify_trials, 1e-3, seed + 22);
        r.note = "max objective " + std::to_string(lm.max_objective);
        return lm.pass ? 1.0 : 0.0;
    });

    rec.check("rotation_invariance", 0.0, 1e-12, [&](CheckRecord&) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            for (double shift : {0.3, 1.2}) {
                std::vector<TrigPolynomial> fs;
                for (int j = 0; j < n; ++j) {
                    std::vector<int> k(static_cast<std::size_t>(n), 0);
                    k[static_cast<std::size_t>(j)] = 1;
                    const double c = j == i ? shift : 0.0;
                    TrigPolynomial fc(n), fsin(n);
                    fc.add(k, std::numbers::sqrt2 * std::cos(c), -std::numbers::sqrt2 * std::sin(c));
                    fsin.add(k, std::numbers::sqrt2 * std::sin(c), std::numbers::sqrt2 * std::cos(c));
                    fs.push_back(std::move(fc));
                    fs.push_back(std::move(fsin));
                }
                worst = std::max(worst, std::abs(std::abs(omega_exact(fs)) - comass_bound(n)));
            }
        }
        return worst;
    });
}

void embedding_checks(Recorder& rec, int n, std::uint64_t seed, const Budget& budget) {
    rec.check("unit_norm", 0.0, 1e-8, [&](CheckRecord& r) {
        std::mt19937_64 rng(seed + 30);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const auto x = random_polydisk(rng, n, 0.9);
            double mass = 1.0;
            for (int i = 0; i < n; ++i) {
                const DiskPoint xi = x[i];
                const Integrand f = [&xi](std::span<const double> a) {
                    return poisson_kernel(xi, CirclePoint(a[0]));
                };
                mass *= tensor_quadrature(f, 1, 2048);
            }
            worst = std::max(worst, std::abs(mass - 1.0));
        }
        r.note = "|Phi_0(x)|_2 = 1 at 100 random x";
        return worst;
    });

    rec.check("density_ratio", 0.0, 1e-5, [&](CheckRecord& r) {
        std::mt19937_64 rng(seed + 31);
        const double expected = std::pow(0.125, n);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t)
            worst = std::max(worst,
                             std::abs(volume_density_ratio(random_polydisk(rng, n, 0.7)) - expected));
        r.note = "(1/8)^n at 50 random points";
        return worst;
    });

    rec.check("pullback_blocks", 0.0, 1e-6, [&](CheckRecord& r) {
        const GramMatrix g = pullback_metric(PolyDiskPoint::origin(n));
        double worst = 0.0;
        for (int i = 0; i < g.dim; ++i)
            for (int j = 0; j < g.dim; ++j)
                worst = std::max(worst, std::abs(g(i, j) - (i == j ? 0.5 : 0.0)));
        r.note = "coordinate Gram at the origin is I/2";
        return worst;
    });

    rec.check("tangent_span", 0.0, 1e-5, [&](CheckRecord& r) {
        TangentFrameReport tfr;
        tangent_frame_at_origin(n, &tfr);
        r.note = "scale error " + std::to_string(tfr.scale_error);
        return tfr.span_residual;
    });

    rec.check("calibration_attainment", 0.0, 1e-12, [&](CheckRecord&) {
        return std::abs(omega_exact(tangent_frame_at_origin(n)) - comass_bound(n));
    });

    if (n <= 2) {
        rec.check("equivariance", 0.0, 1e-10, [&](CheckRecord& r) {
            std::mt19937_64 rng(seed + 33);
            const int grid = n == 1 ? 256 : 64;
            const int trials = budget.certify_trials >= 1000 ? 100 : 25;
            double worst = 0.0;
            for (int t = 0; t < trials; ++t) {
                const auto g = random_product(rng, n, 0.8);
                const auto x = random_polydisk(rng, n, 0.8);
                worst = std::max(worst, equivariance_residual(g, x, grid));
            }
            r.note = std::to_string(trials) + " random (g, x), grid " + std::to_string(grid);
            return worst;
        });
    }
}

}  // namespace

VerificationReport run_suite(const std::string& suite, int n, std::uint64_t seed,
                             const std::string& budget_name) {
    const Budget budget = budget_profile(budget_name);
    if (n < 1) throw std::invalid_argument("run_suite: n must be >= 1");
    if (n > budget.n_limit)
        throw std::invalid_argument("run_suite: n exceeds the '" + budget_name + "' budget limit");

    VerificationReport report;
    report.suite = suite;
    report.n = n;
    report.seed = seed;
    report.budget = budget_name;

    Recorder rec(report, seed);
    const auto t0 = std::chrono::steady_clock::now();

    if (suite == "cocycle") {
        cocycle_checks(rec, n, seed);
    } else if (suite == "fourier") {
        if (n > 2) throw std::invalid_argument("run_suite: fourier suite needs n <= 2");
        fourier_checks(rec, n, seed, budget);
    } else if (suite == "comass") {
        comass_checks(rec, n, seed, budget);
    } else if (suite == "embedding") {
        embedding_checks(rec, n, seed, budget);
    } else if (suite == "all") {
        cocycle_checks(rec, n, seed);
        if (n <= 2) fourier_checks(rec, n, seed, budget);
        comass_checks(rec, n, seed, budget);
        embedding_checks(rec, n, seed, budget);
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }

    report.total_runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace calibra
