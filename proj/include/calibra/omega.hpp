#pragma once

#include <optional>
#include <span>
#include <vector>

#include "calibra/cocycle.hpp"
#include "calibra/integrate.hpp"
#include "calibra/trig.hpp"

namespace calibra {

/// Index data of one Fourier coefficient of the marginal cochain D:
/// 2n frequency rows (one per argument slot) plus a cos/sin choice per row.
struct CoeffMatrix {
    std::vector<FourierIndex> rows;
    std::vector<Phase> phases;

    int n() const { return rows.empty() ? 0 : rows.front().n(); }
    void validate() const;
};

/// Witness that a matrix is, up to row and column permutation, the paired
/// diagonal (k^i, k^i) with opposite phases inside each pair. Predicts the
/// magnitude of the coefficient.
struct PatternCertificate {
    std::vector<int> frequencies;        ///< k^1..k^n listed by axis
    std::vector<int> row_permutation;    ///< rows (cos slot, sin slot) per pair, pairs by axis
    std::vector<int> column_permutation; ///< pair j -> axis
    double predicted_value = 0.0;        ///< 2^n / ((2n)! pi^n prod k^i)
};

/// 2^n / ((2n)! pi^n): the maximum of |Omega| over orthonormal frames.
double comass_bound(int n);

std::optional<PatternCertificate> pattern_match(const CoeffMatrix& m);

/// Exact Fourier coefficient of D:
///   integral D(t_1..t_2n) gamma_{K_1}(t_1) ... gamma_{K_2n}(t_2n) dmu^{2n},
/// gamma_K = sqrt2 cos(K.theta) or sqrt2 sin(K.theta). Evaluated in closed
/// form: trig products are expanded by the addition formulas and each
/// permutation term reduces to one-factor triple integrals.
double fourier_coefficient(const CoeffMatrix& m);

/// D(t_1, ..., t_2n) = integral C(t_0, t_1, ..., t_2n) dmu(t_0), the first
/// slot integrated out in closed form through the Euler marginals.
double D_evaluate(std::span<const TorusPoint> pts);

/// Monte Carlo estimate of Omega_1(f_1, ..., f_2n) over (T^n)^{2n+1}; the
/// cocycle factor is evaluated exactly per sample and converted to double.
MCEstimate omega_mc(std::span<const TrigPolynomial> fs, std::int64_t samples, std::uint64_t seed,
                    int threads = 0);
MCEstimate omega_mc(const Frame& frame, std::int64_t samples, std::uint64_t seed, int threads = 0);

/// Closed-form evaluation of Omega_1(f_1, ..., f_2n): sums the pattern
/// coefficient values against products of frame coefficients. Cost is
/// polynomial in the number of Fourier terms of the inputs.
double omega_exact(std::span<const TrigPolynomial> fs);
double omega_exact(const Frame& frame);

enum class PhaseSet {
    all,         ///< every one of the 2^{2n} cos/sin assignments
    alternating  ///< the single assignment (cos, sin, cos, sin, ...)
};

struct ScanEntry {
    CoeffMatrix matrix;
    double value = 0.0;
    bool pattern = false;
    double predicted = 0.0;  ///< certificate magnitude, 0 off-pattern
    double abs_error = 0.0;  ///< | |value| - predicted |
};

struct ScanReport {
    int n = 0;
    int kmax = 0;
    PhaseSet phase_set = PhaseSet::all;
    std::vector<ScanEntry> entries;
    std::int64_t nonzero_count = 0;
    double max_pattern_error = 0.0;     ///< worst | |value| - predicted | on pattern matrices
    double max_offpattern_value = 0.0;  ///< worst |value| off pattern
    bool consistent = false;            ///< nonzero <=> pattern, within tolerances
};

inline constexpr double tol_fourier = 1e-10;

/// Enumerates every CoeffMatrix with rows bounded by kmax, evaluates the
/// exact coefficient, and cross-checks the nonzero support against
/// pattern_match. Requires n <= 2, kmax <= 3, and a total enumeration of at
/// most 2e6 matrices.
ScanReport scan_fourier(int n, int kmax, PhaseSet phases = PhaseSet::all);

}  // namespace calibra
