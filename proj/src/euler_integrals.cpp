#include "calibra/euler_integrals.hpp"

#include <cmath>
#include <numbers>

namespace calibra {

double euler_marginal(CirclePoint b, CirclePoint c) {
    if (b == c) return 0.0;
    const double d = CirclePoint::reduce(c.angle() - b.angle());
    return 1.0 - d / std::numbers::pi;
}

double euler_trig_triple_unit(int k1, Phase p1, int k2, Phase p2) {
    if (k1 != k2 || p1 == p2) return 0.0;
    const double v = 1.0 / (two_pi * static_cast<double>(k1));
    return p1 == Phase::cos ? v : -v;
}

double euler_trig_triple(const TrigMonomial& m1, const TrigMonomial& m2) {
    // Zero-mean primitive of m1 w.r.t. dmu: cos k -> (amp/(2 pi k)) sin k,
    // sin k -> -(amp/(2 pi k)) cos k. The triple integral is 2 <F1, m2>.
    const TrigMonomial primitive{m1.k, opposite(m1.phase),
                                 (m1.phase == Phase::cos ? 1.0 : -1.0) * m1.amplitude /
                                     (two_pi * static_cast<double>(m1.k))};
    if (primitive.k != m2.k || primitive.phase != m2.phase) return 0.0;
    return 2.0 * 0.5 * primitive.amplitude * m2.amplitude;
}

}  // namespace calibra
