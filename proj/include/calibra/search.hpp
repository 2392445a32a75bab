#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "calibra/omega.hpp"

namespace calibra {

/// All Fourier indices K in I with |K^i| <= kmax, sorted.
std::vector<FourierIndex> fourier_basis(int n, int kmax);

/// Raw coordinates of a candidate frame: 2n coefficient vectors over the
/// truncated basis {(K, cos), (K, sin) : K in basis}.
struct FrameParameterization {
    int n = 0;
    int kmax = 0;
    std::vector<FourierIndex> basis;
    std::vector<std::vector<double>> raw;  ///< 2n vectors of length 2*basis.size()

    static FrameParameterization zeros(int n, int kmax);
    static FrameParameterization from_standard(int n, int kmax);

    TrigPolynomial materialize(int which) const;
    int dim() const { return static_cast<int>(2 * basis.size()); }
};

/// Gram-Schmidt in coefficient space under the L2 inner product. Throws
/// std::runtime_error if the raw vectors are nearly dependent
/// (Gram determinant pivot < 1e-12).
Frame orthonormalize(const FrameParameterization& p);

/// |omega_exact(frame)|.
double objective(const Frame& frame);

inline constexpr double tol_comass = 1e-9;

struct SearchReport {
    double best_value = 0.0;
    std::optional<Frame> best_frame;
    double theoretical = 0.0;  ///< comass_bound(n)
    double gap = 0.0;          ///< theoretical - best_value
    int restarts = 0;
    std::int64_t iterations = 0;  ///< total objective evaluations
    std::uint64_t seed = 0;
    double trace_max = 0.0;  ///< largest objective seen anywhere in the search
};

/// Multi-start coordinate ascent over orthonormal frames. Restart 0 starts
/// at the standard frame, the rest at random parameterizations; each ascent
/// perturbs one raw coordinate at a time, re-orthonormalizes, halves the
/// step on a full sweep without improvement and stops below step 1e-9 or at
/// the iteration cap 1e4. Deterministic in (n, kmax, restarts, seed); the
/// merge takes the max value, ties broken by restart index.
/// Requires n <= 3, kmax <= 3, restarts >= 1.
SearchReport search(int n, int kmax, int restarts, std::uint64_t seed, int threads = 0);

struct LocalMaxReport {
    bool pass = false;
    int trials = 0;
    double radius = 0.0;
    double theoretical = 0.0;
    double max_objective = 0.0;
    std::uint64_t seed = 0;
};

/// Perturbs the standard frame `trials` times within `radius` (coefficient-
/// wise, re-orthonormalized) and checks the objective never exceeds
/// comass_bound(n) + 1e-12. radius <= 1e-2.
LocalMaxReport certify_local_max(int n, int trials, double radius, std::uint64_t seed);

}  // namespace calibra
