#include "calibra/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "calibra/rng.hpp"

namespace calibra {

std::vector<FourierIndex> fourier_basis(int n, int kmax) {
    if (n < 1) throw std::invalid_argument("fourier_basis: n must be >= 1");
    if (kmax < 1) throw std::invalid_argument("fourier_basis: kmax must be >= 1");
    std::vector<FourierIndex> out;
    std::vector<int> v(static_cast<std::size_t>(n), -kmax);
    for (;;) {
        bool half = false;
        for (int x : v) {
            if (x > 0) { half = true; break; }
            if (x < 0) break;
        }
        if (half) out.emplace_back(v);
        int i = 0;
        for (; i < n; ++i) {
            if (++v[static_cast<std::size_t>(i)] <= kmax) break;
            v[static_cast<std::size_t>(i)] = -kmax;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

FrameParameterization FrameParameterization::zeros(int n, int kmax) {
    FrameParameterization p;
    p.n = n;
    p.kmax = kmax;
    p.basis = fourier_basis(n, kmax);
    p.raw.assign(static_cast<std::size_t>(2 * n),
                 std::vector<double>(2 * p.basis.size(), 0.0));
    return p;
}

FrameParameterization FrameParameterization::from_standard(int n, int kmax) {
    FrameParameterization p = zeros(n, kmax);
    const double r2 = std::numbers::sqrt2;
    for (int i = 0; i < n; ++i) {
        std::vector<int> k(static_cast<std::size_t>(n), 0);
        k[static_cast<std::size_t>(i)] = 1;
        const FourierIndex idx{k};
        const auto it = std::lower_bound(p.basis.begin(), p.basis.end(), idx);
        const std::size_t t = static_cast<std::size_t>(it - p.basis.begin());
        p.raw[static_cast<std::size_t>(2 * i)][2 * t] = r2;      // cos slot
        p.raw[static_cast<std::size_t>(2 * i + 1)][2 * t + 1] = r2;  // sin slot
    }
    return p;
}

TrigPolynomial FrameParameterization::materialize(int which) const {
    TrigPolynomial f(n);
    const auto& v = raw[static_cast<std::size_t>(which)];
    for (std::size_t t = 0; t < basis.size(); ++t)
        if (v[2 * t] != 0.0 || v[2 * t + 1] != 0.0)
            f.add(basis[t].k(), v[2 * t], v[2 * t + 1]);
    return f;
}

Frame orthonormalize(const FrameParameterization& p) {
    std::vector<TrigPolynomial> out;
    out.reserve(p.raw.size());
    for (std::size_t i = 0; i < p.raw.size(); ++i) {
        TrigPolynomial v = p.materialize(static_cast<int>(i));
        // two modified Gram-Schmidt passes
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : out) v.add_scaled(u, -inner_product(v, u));
        const double norm2 = inner_product(v, v);
        if (norm2 < 1e-12) throw std::runtime_error("orthonormalize: raw vectors nearly dependent");
        v *= 1.0 / std::sqrt(norm2);
        out.push_back(std::move(v));
    }
    return Frame::make(std::move(out));
}

double objective(const Frame& frame) { return std::abs(omega_exact(frame)); }

namespace {

struct RestartResult {
    double best = -1.0;
    std::optional<Frame> frame;
    std::int64_t iterations = 0;
    double trace_max = 0.0;
};

constexpr std::int64_t kIterationCap = 10000;
constexpr double kMinStep = 1e-9;

RestartResult run_restart(int n, int kmax, int restart, std::uint64_t seed) {
    FrameParameterization p = FrameParameterization::zeros(n, kmax);
    const std::uint64_t stream = counter_rand(seed, 0x5eedULL + static_cast<std::uint64_t>(restart));

    RestartResult res;
    if (restart == 0) {
        p = FrameParameterization::from_standard(n, kmax);
    } else {
        for (std::uint64_t attempt = 0;; ++attempt) {
            std::uint64_t idx = attempt << 32;
            for (auto& vec : p.raw)
                for (auto& x : vec) x = 2.0 * counter_uniform01(stream, idx++) - 1.0;
            try {
                orthonormalize(p);
                break;
            } catch (const std::runtime_error&) {
                if (attempt > 32) throw;
            }
        }
    }

    Frame frame = orthonormalize(p);
    double best = objective(frame);
    res.iterations = 1;
    res.trace_max = best;

    double step = 0.25;
    const int nfun = 2 * n, dim = p.dim();
    while (step > kMinStep && res.iterations < kIterationCap) {
        bool improved = false;
        for (int f = 0; f < nfun && res.iterations < kIterationCap; ++f) {
            for (int d = 0; d < dim && res.iterations < kIterationCap; ++d) {
                for (double dir : {1.0, -1.0}) {
                    FrameParameterization trial = p;
                    trial.raw[static_cast<std::size_t>(f)][static_cast<std::size_t>(d)] += dir * step;
                    ++res.iterations;
                    double v;
                    try {
                        Frame tf = orthonormalize(trial);
                        v = objective(tf);
                        if (v > res.trace_max) res.trace_max = v;
                        if (v > best + 1e-15) {
                            p = std::move(trial);
                            frame = std::move(tf);
                            best = v;
                            improved = true;
                            break;
                        }
                    } catch (const std::runtime_error&) {
                        // degenerate trial: not an improvement
                    }
                    if (res.iterations >= kIterationCap) break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }

    res.best = best;
    res.frame = std::move(frame);
    return res;
}

}  // namespace

SearchReport search(int n, int kmax, int restarts, std::uint64_t seed, int threads) {
    if (n < 1 || n > 3) throw std::invalid_argument("search: need 1 <= n <= 3");
    if (kmax < 1 || kmax > 3) throw std::invalid_argument("search: need 1 <= kmax <= 3");
    if (restarts < 1) throw std::invalid_argument("search: need restarts >= 1");

    std::vector<RestartResult> results(static_cast<std::size_t>(restarts));
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, restarts);

    auto work = [&](int w) {
        for (int r = w; r < restarts; r += workers)
            results[static_cast<std::size_t>(r)] = run_restart(n, kmax, r, seed);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    SearchReport report;
    report.theoretical = comass_bound(n);
    report.restarts = restarts;
    report.seed = seed;
    int best_r = 0;
    for (int r = 0; r < restarts; ++r) {
        const auto& rr = results[static_cast<std::size_t>(r)];
        report.iterations += rr.iterations;
        report.trace_max = std::max(report.trace_max, rr.trace_max);
        if (rr.best > results[static_cast<std::size_t>(best_r)].best) best_r = r;
    }
    report.best_value = results[static_cast<std::size_t>(best_r)].best;
    report.best_frame = results[static_cast<std::size_t>(best_r)].frame;
    report.gap = report.theoretical - report.best_value;
    return report;
}

LocalMaxReport certify_local_max(int n, int trials, double radius, std::uint64_t seed) {
    if (radius < 0.0 || radius > 1e-2)
        throw std::invalid_argument("certify_local_max: radius must lie in [0, 1e-2]");
    if (trials < 1) throw std::invalid_argument("certify_local_max: need trials >= 1");

    const int kmax = 3;
    const FrameParameterization base = FrameParameterization::from_standard(n, kmax);
    LocalMaxReport rep;
    rep.trials = trials;
    rep.radius = radius;
    rep.theoretical = comass_bound(n);
    rep.seed = seed;

    std::uint64_t idx = 0;
    for (int t = 0; t < trials; ++t) {
        FrameParameterization p = base;
        for (auto& vec : p.raw)
            for (auto& x : vec) x += radius * (2.0 * counter_uniform01(seed, idx++) - 1.0);
        const double v = objective(orthonormalize(p));
        rep.max_objective = std::max(rep.max_objective, v);
    }
    rep.pass = rep.max_objective <= rep.theoretical + 1e-12;
    return rep;
}

}  // namespace calibra
