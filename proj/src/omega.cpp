#include "calibra/omega.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "calibra/euler_integrals.hpp"

namespace calibra {

double comass_bound(int n) {
    if (n < 1) throw std::invalid_argument("comass_bound: n must be >= 1");
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= 2.0 / std::numbers::pi;
    return v / static_cast<double>(factorial(2 * n));
}

void CoeffMatrix::validate() const {
    if (rows.empty()) throw std::invalid_argument("CoeffMatrix: empty");
    const int dim = rows.front().n();
    if (static_cast<int>(rows.size()) != 2 * dim)
        throw std::invalid_argument("CoeffMatrix: need 2n rows of length n");
    for (const auto& r : rows)
        if (r.n() != dim) throw std::invalid_argument("CoeffMatrix: ragged rows");
    if (phases.size() != rows.size())
        throw std::invalid_argument("CoeffMatrix: need one phase per row");
}

std::optional<PatternCertificate> pattern_match(const CoeffMatrix& m) {
    m.validate();
    const int n = m.n();

    // Every row must be a single positive frequency on one axis.
    std::vector<int> axis(m.rows.size()), freq(m.rows.size());
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        int a = 0, k = 0;
        if (!m.rows[r].single_axis(a, k)) return std::nullopt;
        axis[r] = a;
        freq[r] = k;  // positive: single-entry rows of I
    }

    // Rows must pair up: each axis carried by exactly two rows with equal
    // frequency and opposite phases.
    std::vector<std::vector<int>> byaxis(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        byaxis[static_cast<std::size_t>(axis[r])].push_back(static_cast<int>(r));

    for (const auto& rows : byaxis)
        if (rows.size() != 2) return std::nullopt;

    PatternCertificate cert;
    cert.frequencies.resize(static_cast<std::size_t>(n));

    // Pairs listed in order of first appearance; columns record their axes.
    std::vector<std::pair<int, int>> pairs_in_order;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        const int a = axis[r];
        if (seen[static_cast<std::size_t>(a)]) continue;
        seen[static_cast<std::size_t>(a)] = true;
        const int r1 = byaxis[static_cast<std::size_t>(a)][0];
        const int r2 = byaxis[static_cast<std::size_t>(a)][1];
        if (freq[static_cast<std::size_t>(r1)] != freq[static_cast<std::size_t>(r2)]) return std::nullopt;
        if (m.phases[static_cast<std::size_t>(r1)] == m.phases[static_cast<std::size_t>(r2)]) return std::nullopt;
        cert.frequencies[static_cast<std::size_t>(a)] = freq[static_cast<std::size_t>(r1)];
        const int cos_row = m.phases[static_cast<std::size_t>(r1)] == Phase::cos ? r1 : r2;
        const int sin_row = cos_row == r1 ? r2 : r1;
        pairs_in_order.emplace_back(cos_row, sin_row);
        cert.column_permutation.push_back(a);
    }

    for (auto [cr, sr] : pairs_in_order) {
        cert.row_permutation.push_back(cr);
        cert.row_permutation.push_back(sr);
    }

    double v = comass_bound(n);
    for (int k : cert.frequencies) v /= static_cast<double>(k);
    cert.predicted_value = v;
    return cert;
}

namespace {

struct MonoFactor {
    int axis;
    int freq;  // >= 1
    Phase phase;
};

struct ExpTerm {
    double coef;
    std::vector<MonoFactor> factors;  // one per nonzero coordinate of K
};

// gamma_K = sqrt2 phase(K.theta) expanded by the addition formulas into a
// sum of products of single-coordinate cos/sin factors.
std::vector<ExpTerm> expand_gamma(const FourierIndex& K, Phase phase) {
    std::vector<std::pair<int, int>> comps;  // (axis, signed k)
    for (int a = 0; a < K.n(); ++a)
        if (K[a] != 0) comps.emplace_back(a, K[a]);

    struct Partial {
        double coef;
        std::vector<MonoFactor> factors;
        Phase rest;
    };
    std::vector<Partial> state{{std::numbers::sqrt2, {}, phase}};

    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto [a, k] = comps[c];
        const int kk = std::abs(k);
        const double sgn = k < 0 ? -1.0 : 1.0;
        const bool last = c + 1 == comps.size();
        std::vector<Partial> next;
        next.reserve(state.size() * 2);
        for (auto& p : state) {
            if (last) {
                // apply the remaining phase to this single angle
                Partial q = p;
                if (p.rest == Phase::cos) {
                    q.factors.push_back({a, kk, Phase::cos});
                } else {
                    q.factors.push_back({a, kk, Phase::sin});
                    q.coef *= sgn;
                }
                next.push_back(std::move(q));
            } else if (p.rest == Phase::cos) {
                // cos(A + R) = cos A cos R - sin A sin R
                Partial q1 = p;
                q1.factors.push_back({a, kk, Phase::cos});
                next.push_back(std::move(q1));
                Partial q2 = p;
                q2.factors.push_back({a, kk, Phase::sin});
                q2.coef *= -sgn;
                q2.rest = Phase::sin;
                next.push_back(std::move(q2));
            } else {
                // sin(A + R) = sin A cos R + cos A sin R
                Partial q1 = p;
                q1.factors.push_back({a, kk, Phase::sin});
                q1.coef *= sgn;
                next.push_back(std::move(q1));
                Partial q2 = p;
                q2.factors.push_back({a, kk, Phase::cos});
                q2.rest = Phase::sin;
                next.push_back(std::move(q2));
            }
        }
        state = std::move(next);
    }

    std::vector<ExpTerm> out;
    out.reserve(state.size());
    for (auto& p : state) out.push_back({p.coef, std::move(p.factors)});
    return out;
}

struct Carrier {
    int point;  // 1..2n
    int freq;
    Phase phase;
};

// One fully expanded product choice: per coordinate, the points carrying a
// trig factor there. Contributes only if every coordinate has exactly two
// carriers with equal frequency and opposite phases; integrating out any
// unmatched variable kills the term.
double sigma_sum(int n, const std::vector<std::vector<Carrier>>& carriers,
                 const std::vector<SignedPermutation>& perms) {
    for (int i = 0; i < n; ++i) {
        if (carriers[static_cast<std::size_t>(i)].size() != 2) return 0.0;
        const auto& c = carriers[static_cast<std::size_t>(i)];
        if (euler_trig_triple_unit(c[0].freq, c[0].phase, c[1].freq, c[1].phase) == 0.0) return 0.0;
    }

    double total = 0.0;
    for (const auto& [perm, sign] : perms) {
        double val = sign;
        for (int i = 1; i <= n && val != 0.0; ++i) {
            const int s0 = perm[static_cast<std::size_t>(2 * i - 2)];
            const int s1 = perm[static_cast<std::size_t>(2 * i - 1)];
            const int s2 = perm[static_cast<std::size_t>(2 * i)];
            const auto& c = carriers[static_cast<std::size_t>(i - 1)];
            int pos0 = c[0].point == s0 ? 0 : c[0].point == s1 ? 1 : c[0].point == s2 ? 2 : -1;
            int pos1 = c[1].point == s0 ? 0 : c[1].point == s1 ? 1 : c[1].point == s2 ? 2 : -1;
            if (pos0 < 0 || pos1 < 0) {
                val = 0.0;
                break;
            }
            const Carrier& lo = pos0 < pos1 ? c[0] : c[1];
            const Carrier& hi = pos0 < pos1 ? c[1] : c[0];
            const int plo = std::min(pos0, pos1), phi = std::max(pos0, pos1);
            const double slot_sign = (plo == 0 && phi == 2) ? -1.0 : 1.0;
            val *= slot_sign * euler_trig_triple_unit(lo.freq, lo.phase, hi.freq, hi.phase);
        }
        total += val;
    }
    return total;
}

}  // namespace

double fourier_coefficient(const CoeffMatrix& m) {
    m.validate();
    const int n = m.n();
    const int rows = 2 * n;

    std::vector<std::vector<ExpTerm>> expansions;
    expansions.reserve(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        expansions.push_back(expand_gamma(m.rows[static_cast<std::size_t>(r)],
                                          m.phases[static_cast<std::size_t>(r)]));

    const auto perms = all_permutations(2 * n + 1);

    // Odometer over one expansion term per row.
    std::vector<std::size_t> choice(static_cast<std::size_t>(rows), 0);
    double total = 0.0;
    for (;;) {
        double coef = 1.0;
        std::vector<std::vector<Carrier>> carriers(static_cast<std::size_t>(n));
        for (int r = 0; r < rows; ++r) {
            const ExpTerm& t = expansions[static_cast<std::size_t>(r)][choice[static_cast<std::size_t>(r)]];
            coef *= t.coef;
            for (const auto& f : t.factors)
                carriers[static_cast<std::size_t>(f.axis)].push_back({r + 1, f.freq, f.phase});
        }
        total += coef * sigma_sum(n, carriers, perms);

        int r = 0;
        for (; r < rows; ++r) {
            auto& c = choice[static_cast<std::size_t>(r)];
            if (++c < expansions[static_cast<std::size_t>(r)].size()) break;
            c = 0;
        }
        if (r == rows) break;
    }
    return total / static_cast<double>(factorial(2 * n + 1));
}

double D_evaluate(std::span<const TorusPoint> pts) {
    if (pts.empty()) throw std::invalid_argument("D_evaluate: empty tuple");
    const int n = pts.front().n();
    if (static_cast<int>(pts.size()) != 2 * n)
        throw std::invalid_argument("D_evaluate: tuple must have 2n points");
    for (const auto& p : pts)
        if (p.n() != n) throw std::invalid_argument("D_evaluate: mixed torus dimensions");

    // Point index 0 is the integrated slot; where it appears, the Euler
    // factor becomes a marginal with a position sign (middle slot is odd).
    const auto perms = all_permutations(2 * n + 1);
    double total = 0.0;
    for (const auto& [perm, sign] : perms) {
        double term = sign;
        for (int i = 1; i <= n && term != 0.0; ++i) {
            const int ci = i - 1;
            const int q[3] = {perm[static_cast<std::size_t>(2 * i - 2)],
                              perm[static_cast<std::size_t>(2 * i - 1)],
                              perm[static_cast<std::size_t>(2 * i)]};
            int zero_pos = -1;
            for (int s = 0; s < 3; ++s)
                if (q[s] == 0) zero_pos = s;
            if (zero_pos < 0) {
                term *= euler_class(pts[static_cast<std::size_t>(q[0] - 1)][ci],
                                    pts[static_cast<std::size_t>(q[1] - 1)][ci],
                                    pts[static_cast<std::size_t>(q[2] - 1)][ci]);
            } else {
                CirclePoint uv[2];
                int w = 0;
                for (int s = 0; s < 3; ++s)
                    if (s != zero_pos) uv[w++] = pts[static_cast<std::size_t>(q[s] - 1)][ci];
                const double marg = euler_marginal(uv[0], uv[1]);
                term *= (zero_pos == 1 ? -marg : marg);
            }
        }
        total += term;
    }
    return total / static_cast<double>(factorial(2 * n + 1));
}

namespace {

void check_family(std::span<const TrigPolynomial> fs) {
    if (fs.empty() || fs.size() % 2 != 0)
        throw std::invalid_argument("omega: need 2n functions");
    const int n = static_cast<int>(fs.size()) / 2;
    for (const auto& f : fs) {
        if (f.n() != n) throw std::invalid_argument("omega: need 2n functions on T^n");
        if (!f.zero_mean()) throw std::invalid_argument("omega: functions must be zero-mean");
    }
}

// Memoized exact coefficient values; keyed by the flattened matrix.
double coeff_value_cached(const CoeffMatrix& m) {
    static std::map<std::vector<int>, double> cache;
    static std::mutex mutex;

    std::vector<int> key;
    key.reserve(m.rows.size() * (static_cast<std::size_t>(m.n()) + 1));
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        for (int v : m.rows[r].k()) key.push_back(v);
        key.push_back(m.phases[r] == Phase::cos ? 0 : 1);
    }
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const double v = fourier_coefficient(m);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::move(key), v);
    return v;
}

void matchings_rec(std::vector<int>& avail, std::vector<std::pair<int, int>>& cur,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
    if (avail.empty()) {
        out.push_back(cur);
        return;
    }
    const int p = avail.front();
    for (std::size_t i = 1; i < avail.size(); ++i) {
        const int q = avail[i];
        std::vector<int> rest;
        rest.reserve(avail.size() - 2);
        for (std::size_t j = 1; j < avail.size(); ++j)
            if (j != i) rest.push_back(avail[j]);
        cur.emplace_back(p, q);
        matchings_rec(rest, cur, out);
        cur.pop_back();
    }
}

const std::vector<std::vector<std::pair<int, int>>>& matchings(int count) {
    static std::map<int, std::vector<std::vector<std::pair<int, int>>>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(count);
    if (it != cache.end()) return it->second;
    std::vector<int> avail(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) avail[static_cast<std::size_t>(i)] = i;
    std::vector<std::pair<int, int>> cur;
    std::vector<std::vector<std::pair<int, int>>> out;
    matchings_rec(avail, cur, out);
    return cache.emplace(count, std::move(out)).first->second;
}

}  // namespace

double omega_exact(std::span<const TrigPolynomial> fs) {
    check_family(fs);
    const int n = static_cast<int>(fs.size()) / 2;
    const double inv_r2 = 1.0 / std::numbers::sqrt2;

    // Single-axis spectrum of each function: axis -> freq -> (a, b).
    using AxisSpec = std::vector<std::map<int, std::array<double, 2>>>;
    std::vector<AxisSpec> spec(fs.size(), AxisSpec(static_cast<std::size_t>(n)));
    for (std::size_t j = 0; j < fs.size(); ++j) {
        for (const auto& [k, ab] : fs[j].terms()) {
            int axis = 0, freq = 0;
            if (k.single_axis(axis, freq))
                spec[j][static_cast<std::size_t>(axis)][freq] = ab;
        }
    }

    std::vector<int> axes(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) axes[static_cast<std::size_t>(a)] = a;

    double total = 0.0;
    CoeffMatrix m;
    m.rows.assign(fs.size(), FourierIndex(std::vector<int>{1}));
    m.phases.assign(fs.size(), Phase::cos);

    for (const auto& matching : matchings(2 * n)) {
        std::vector<int> axis_of(static_cast<std::size_t>(n));
        std::sort(axes.begin(), axes.end());
        do {
            // candidate frequencies per pair on its axis
            std::vector<std::vector<int>> freqs(static_cast<std::size_t>(n));
            bool feasible = true;
            for (int j = 0; j < n && feasible; ++j) {
                const auto [p, q] = matching[static_cast<std::size_t>(j)];
                const int a = axes[static_cast<std::size_t>(j)];
                const auto& sp = spec[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)];
                const auto& sq = spec[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)];
                for (const auto& [k, ab] : sp)
                    if (sq.count(k)) freqs[static_cast<std::size_t>(j)].push_back(k);
                feasible = !freqs[static_cast<std::size_t>(j)].empty();
            }
            if (!feasible) continue;

            // odometer over per-pair frequency and phase arrangement
            std::vector<std::size_t> fc(static_cast<std::size_t>(n), 0);
            std::vector<int> pc(static_cast<std::size_t>(n), 0);  // 0: (cos@p, sin@q), 1: swapped
            for (;;) {
                double coef = 1.0;
                for (int j = 0; j < n && coef != 0.0; ++j) {
                    const auto [p, q] = matching[static_cast<std::size_t>(j)];
                    const int a = axes[static_cast<std::size_t>(j)];
                    const int k = freqs[static_cast<std::size_t>(j)][fc[static_cast<std::size_t>(j)]];
                    const Phase pp = pc[static_cast<std::size_t>(j)] == 0 ? Phase::cos : Phase::sin;
                    const Phase pq = opposite(pp);
                    const auto& ap = spec[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)].at(k);
                    const auto& aq = spec[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)].at(k);
                    const double cp = ap[static_cast<std::size_t>(pp)] * inv_r2;
                    const double cq = aq[static_cast<std::size_t>(pq)] * inv_r2;
                    coef *= cp * cq;

                    std::vector<int> row(static_cast<std::size_t>(n), 0);
                    row[static_cast<std::size_t>(a)] = k;
                    m.rows[static_cast<std::size_t>(p)] = FourierIndex(row);
                    m.rows[static_cast<std::size_t>(q)] = FourierIndex(std::move(row));
                    m.phases[static_cast<std::size_t>(p)] = pp;
                    m.phases[static_cast<std::size_t>(q)] = pq;
                }
                if (coef != 0.0) total += coef * coeff_value_cached(m);

                // advance (frequency choices, then phase bits)
                int j = 0;
                for (; j < n; ++j) {
                    auto& c = fc[static_cast<std::size_t>(j)];
                    if (++c < freqs[static_cast<std::size_t>(j)].size()) break;
                    c = 0;
                }
                if (j < n) continue;
                for (j = 0; j < n; ++j) {
                    auto& c = pc[static_cast<std::size_t>(j)];
                    if (++c < 2) break;
                    c = 0;
                }
                if (j == n) break;
            }
        } while (std::next_permutation(axes.begin(), axes.end()));
    }
    return total;
}

double omega_exact(const Frame& frame) { return omega_exact(frame.functions()); }

MCEstimate omega_mc(std::span<const TrigPolynomial> fs, std::int64_t samples, std::uint64_t seed,
                    int threads) {
    check_family(fs);
    const int n = static_cast<int>(fs.size()) / 2;
    const int points = 2 * n + 1;
    const int dim = points * n;

    std::vector<TrigPolynomial> funcs(fs.begin(), fs.end());
    Integrand f = [n, points, funcs](std::span<const double> angles) {
        std::vector<TorusPoint> tuple;
        tuple.reserve(static_cast<std::size_t>(points));
        for (int t = 0; t < points; ++t)
            tuple.push_back(TorusPoint::from_angles(
                angles.subspan(static_cast<std::size_t>(t) * static_cast<std::size_t>(n),
                               static_cast<std::size_t>(n))));
        double v = cocycle_value(tuple);
        for (std::size_t j = 0; v != 0.0 && j < funcs.size(); ++j)
            v *= funcs[j](tuple[j + 1]);
        return v;
    };
    return mc_integrate(f, dim, samples, seed, threads);
}

MCEstimate omega_mc(const Frame& frame, std::int64_t samples, std::uint64_t seed, int threads) {
    return omega_mc(frame.functions(), samples, seed, threads);
}

ScanReport scan_fourier(int n, int kmax, PhaseSet phases) {
    if (n < 1 || n > 2) throw std::invalid_argument("scan_fourier: need 1 <= n <= 2");
    if (kmax < 1 || kmax > 3) throw std::invalid_argument("scan_fourier: need 1 <= kmax <= 3");

    // all rows in I with entries bounded by kmax
    std::vector<FourierIndex> rows;
    {
        std::vector<int> v(static_cast<std::size_t>(n), -kmax);
        for (;;) {
            bool half = false;
            for (int x : v) {
                if (x > 0) { half = true; break; }
                if (x < 0) break;
            }
            if (half) rows.emplace_back(v);
            int i = 0;
            for (; i < n; ++i) {
                if (++v[static_cast<std::size_t>(i)] <= kmax) break;
                v[static_cast<std::size_t>(i)] = -kmax;
            }
            if (i == n) break;
        }
        std::sort(rows.begin(), rows.end());
    }

    const int nrows = 2 * n;
    double count = 1.0;
    for (int r = 0; r < nrows; ++r) count *= static_cast<double>(rows.size());
    const double phase_count = phases == PhaseSet::all ? std::pow(2.0, nrows) : 1.0;
    if (count * phase_count > 2e6)
        throw std::runtime_error("scan_fourier: enumeration budget 2e6 exceeded");

    ScanReport report;
    report.n = n;
    report.kmax = kmax;
    report.phase_set = phases;
    report.consistent = true;

    std::vector<std::size_t> ridx(static_cast<std::size_t>(nrows), 0);
    for (;;) {
        const int phase_assignments = phases == PhaseSet::all ? (1 << nrows) : 1;
        for (int pa = 0; pa < phase_assignments; ++pa) {
            ScanEntry e;
            e.matrix.rows.clear();
            for (int r = 0; r < nrows; ++r) e.matrix.rows.push_back(rows[ridx[static_cast<std::size_t>(r)]]);
            e.matrix.phases.resize(static_cast<std::size_t>(nrows));
            for (int r = 0; r < nrows; ++r) {
                const bool sin_r = phases == PhaseSet::all ? ((pa >> r) & 1) != 0 : (r % 2 == 1);
                e.matrix.phases[static_cast<std::size_t>(r)] = sin_r ? Phase::sin : Phase::cos;
            }

            e.value = fourier_coefficient(e.matrix);
            auto cert = pattern_match(e.matrix);
            e.pattern = cert.has_value();
            const bool nonzero = std::abs(e.value) > tol_fourier;
            if (e.pattern) {
                e.predicted = cert->predicted_value;
                e.abs_error = std::abs(std::abs(e.value) - e.predicted);
                report.max_pattern_error = std::max(report.max_pattern_error, e.abs_error);
                if (!nonzero || e.abs_error > tol_fourier) report.consistent = false;
            } else {
                report.max_offpattern_value = std::max(report.max_offpattern_value, std::abs(e.value));
                if (nonzero) report.consistent = false;
            }
            if (nonzero) ++report.nonzero_count;
            report.entries.push_back(std::move(e));
        }

        int r = 0;
        for (; r < nrows; ++r) {
            auto& c = ridx[static_cast<std::size_t>(r)];
            if (++c < rows.size()) break;
            c = 0;
        }
        if (r == nrows) break;
    }
    return report;
}

}  // namespace calibra
