#include "calibra/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace calibra {

namespace {

double ipow(double base, int exp) {
    double v = 1.0;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

}  // namespace

double minvol_bound(int n, double vol_g0) {
    if (n < 1) throw std::invalid_argument("minvol_bound: n must be >= 1");
    if (!(vol_g0 > 0.0)) throw std::invalid_argument("minvol_bound: volume must be positive");
    // (sqrt(n)/(2n-1))^{2n} = n^n / (2n-1)^{2n}
    return ipow(static_cast<double>(n), n) / ipow(static_cast<double>(2 * n - 1), 2 * n) * vol_g0;
}

std::int64_t degree_bound(int n, double h_g, double vol_y, double vol_m) {
    if (n < 1) throw std::invalid_argument("degree_bound: n must be >= 1");
    if (!(h_g > 0.0) || !(vol_y > 0.0) || !(vol_m > 0.0))
        throw std::invalid_argument("degree_bound: inputs must be positive");
    const double ratio = ipow(h_g, 2 * n) * vol_y / (ipow(static_cast<double>(n), n) * vol_m);
    // nudge absorbs roundoff when the ratio sits at an integer (e.g. h = sqrt(n))
    return static_cast<std::int64_t>(std::floor(ratio * (1.0 + 1e-9)));
}

std::int64_t degree_bound(const BoundQuery& q) {
    if (!q.h_g || !q.vol_y || !q.vol_m)
        throw std::invalid_argument("degree_bound: h_g, vol_y and vol_m are required");
    return degree_bound(q.n, *q.h_g, *q.vol_y, *q.vol_m);
}

double curvature_entropy_bound(int n) {
    if (n < 1) throw std::invalid_argument("curvature_entropy_bound: n must be >= 1");
    return static_cast<double>(2 * n - 1);
}

}  // namespace calibra
