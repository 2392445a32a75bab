#include "calibra/integrate.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "calibra/rng.hpp"

namespace calibra {

namespace {

constexpr std::int64_t kChunk = 8192;

struct Partial {
    double sum = 0.0;
    double sum_sq = 0.0;
};

Partial run_chunk(const Integrand& f, int dim, std::uint64_t seed, std::int64_t begin,
                  std::int64_t end) {
    Partial p;
    std::vector<double> angles(static_cast<std::size_t>(dim));
    for (std::int64_t i = begin; i < end; ++i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(dim);
        for (int d = 0; d < dim; ++d)
            angles[static_cast<std::size_t>(d)] = counter_angle(seed, base + static_cast<std::uint64_t>(d));
        const double v = f(angles);
        p.sum += v;
        p.sum_sq += v * v;
    }
    return p;
}

}  // namespace

MCEstimate mc_integrate(const Integrand& f, int dim, std::int64_t samples, std::uint64_t seed,
                        int threads) {
    if (dim < 1) throw std::invalid_argument("mc_integrate: dim must be >= 1");
    if (samples < 2) throw std::invalid_argument("mc_integrate: need at least 2 samples");

    const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<Partial> partials(static_cast<std::size_t>(chunks));

    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (static_cast<std::int64_t>(workers) > chunks) workers = static_cast<int>(chunks);

    auto work = [&](int w) {
        for (std::int64_t c = w; c < chunks; c += workers) {
            const std::int64_t begin = c * kChunk;
            const std::int64_t end = std::min(begin + kChunk, samples);
            partials[static_cast<std::size_t>(c)] = run_chunk(f, dim, seed, begin, end);
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    // Combine in chunk order so the result is worker-count independent.
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& p : partials) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }

    MCEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.value = sum / static_cast<double>(samples);
    double var = (sum_sq - static_cast<double>(samples) * est.value * est.value) /
                 static_cast<double>(samples - 1);
    if (var < 0.0) var = 0.0;  // roundoff on constant integrands
    est.std_error = std::sqrt(var / static_cast<double>(samples));
    return est;
}

double tensor_quadrature(const Integrand& f, int dim, int nodes_per_axis) {
    if (dim < 1) throw std::invalid_argument("tensor_quadrature: dim must be >= 1");
    if (nodes_per_axis < 4) throw std::invalid_argument("tensor_quadrature: need >= 4 nodes per axis");

    double total_nodes = 1.0;
    for (int d = 0; d < dim; ++d) {
        total_nodes *= nodes_per_axis;
        if (total_nodes > 1e8)
            throw std::runtime_error("tensor_quadrature: node budget 1e8 exceeded");
    }

    const std::int64_t m = nodes_per_axis;
    std::int64_t count = 1;
    for (int d = 0; d < dim; ++d) count *= m;

    const double h = two_pi / static_cast<double>(m);
    std::vector<double> angles(static_cast<std::size_t>(dim), 0.0);
    double sum = 0.0;
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::int64_t rest = idx;
        for (int d = 0; d < dim; ++d) {
            angles[static_cast<std::size_t>(d)] = h * static_cast<double>(rest % m);
            rest /= m;
        }
        sum += f(angles);
    }
    return sum / static_cast<double>(count);
}

}  // namespace calibra
