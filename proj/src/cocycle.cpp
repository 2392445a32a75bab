#include "calibra/cocycle.hpp"

#include <algorithm>
#include <numeric>

namespace calibra {

int euler_class(CirclePoint a, CirclePoint b, CirclePoint c) {
    // Rotate so the triple starts at a; the order of the remaining two
    // offsets decides the orientation. No trigonometry needed.
    const double u = CirclePoint::reduce(b.angle() - a.angle());
    const double v = CirclePoint::reduce(c.angle() - a.angle());
    if (u == 0.0 || v == 0.0 || u == v) return 0;
    return u < v ? 1 : -1;
}

std::int64_t factorial(int m) {
    std::int64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

std::vector<SignedPermutation> all_permutations(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> out;
    out.reserve(static_cast<std::size_t>(factorial(m)));
    do {
        int inversions = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        out.push_back({perm, inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

int tuple_dim(std::span<const TorusPoint> pts) {
    const int n = pts.front().n();
    for (const auto& p : pts)
        if (p.n() != n) throw std::invalid_argument("tuple: mixed torus dimensions");
    return n;
}

// Integer permutation sum; the exact value of C is sum / (2n+1)!.
std::int64_t cocycle_numerator(std::span<const TorusPoint> pts, int n) {
    static thread_local std::vector<std::vector<SignedPermutation>> cache;
    const int m = 2 * n + 1;
    if (cache.size() <= static_cast<std::size_t>(m)) cache.resize(static_cast<std::size_t>(m) + 1);
    auto& perms = cache[static_cast<std::size_t>(m)];
    if (perms.empty()) perms = all_permutations(m);

    std::int64_t sum = 0;
    for (const auto& [perm, sign] : perms) {
        int prod = 1;
        for (int i = 1; i <= n; ++i) {
            const int ci = i - 1;  // circle factor
            prod *= euler_class(pts[static_cast<std::size_t>(perm[static_cast<std::size_t>(2 * i - 2)])][ci],
                                pts[static_cast<std::size_t>(perm[static_cast<std::size_t>(2 * i - 1)])][ci],
                                pts[static_cast<std::size_t>(perm[static_cast<std::size_t>(2 * i)])][ci]);
            if (prod == 0) break;
        }
        sum += sign * prod;
    }
    return sum;
}

}  // namespace

ExactRational cocycle(std::span<const TorusPoint> pts) {
    const int n = tuple_dim(pts);
    if (static_cast<int>(pts.size()) != 2 * n + 1)
        throw std::invalid_argument("cocycle: tuple must have 2n+1 points");
    return ExactRational(cocycle_numerator(pts, n), factorial(2 * n + 1));
}

double cocycle_value(std::span<const TorusPoint> pts) {
    const int n = tuple_dim(pts);
    if (static_cast<int>(pts.size()) != 2 * n + 1)
        throw std::invalid_argument("cocycle: tuple must have 2n+1 points");
    return static_cast<double>(cocycle_numerator(pts, n)) /
           static_cast<double>(factorial(2 * n + 1));
}

ExactRational coboundary(std::span<const TorusPoint> pts) {
    const int n = tuple_dim(pts);
    if (static_cast<int>(pts.size()) != 2 * n + 2)
        throw std::invalid_argument("coboundary: tuple must have 2n+2 points");
    ExactRational sum;
    std::vector<TorusPoint> face;
    face.reserve(pts.size() - 1);
    for (std::size_t skip = 0; skip < pts.size(); ++skip) {
        face.clear();
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != skip) face.push_back(pts[j]);
        const ExactRational term = cocycle(face);
        sum += (skip % 2 == 0) ? term : -term;
    }
    return sum;
}

ExactRational invariance_residual(const ProductAutomorphism& g, std::span<const TorusPoint> pts) {
    std::vector<TorusPoint> moved;
    moved.reserve(pts.size());
    for (const auto& p : pts) moved.push_back(g.apply(p));
    return cocycle(moved) - cocycle(pts);
}

std::vector<SignedPermutation> suitable_permutations(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("suitable_permutations: need 1 <= n <= 4");
    std::vector<SignedPermutation> out;
    for (auto& sp : all_permutations(2 * n + 1)) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            const int s0 = sp.perm[static_cast<std::size_t>(2 * i - 2)];
            const int s1 = sp.perm[static_cast<std::size_t>(2 * i - 1)];
            const int s2 = sp.perm[static_cast<std::size_t>(2 * i)];
            for (int want : {2 * i - 1, 2 * i})
                if (want != s0 && want != s1 && want != s2) { ok = false; break; }
        }
        if (ok) out.push_back(std::move(sp));
    }
    return out;
}

}  // namespace calibra
