#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "calibra/circle.hpp"

namespace calibra {

/// Monte Carlo estimate. Reproducible: the same (seed, samples, integrand)
/// gives a bit-identical value, independent of the number of workers.
struct MCEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Integrand over (S^1)^dim; receives `dim` angles in [0, 2pi).
using Integrand = std::function<double(std::span<const double>)>;

/// Mean of f against the product probability measure on (S^1)^dim, with
/// standard error (sample standard deviation / sqrt(samples)).
///
/// Sampling is i.i.d. uniform driven by the counter RNG, so the estimate is
/// a pure function of (f, dim, samples, seed). Work is split into fixed-size
/// chunks whose partial sums are combined in chunk order; the thread count
/// (0 = hardware default) never changes the result.
MCEstimate mc_integrate(const Integrand& f, int dim, std::int64_t samples, std::uint64_t seed,
                        int threads = 0);

/// Trapezoidal product rule on the torus: nodes_per_axis^dim uniform nodes.
/// Spectrally accurate for smooth integrands. Requires nodes_per_axis >= 4
/// and nodes_per_axis^dim <= 1e8.
double tensor_quadrature(const Integrand& f, int dim, int nodes_per_axis);

}  // namespace calibra
