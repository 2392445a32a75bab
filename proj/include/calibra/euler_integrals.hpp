#pragma once

#include "calibra/circle.hpp"
#include "calibra/trig.hpp"

namespace calibra {

/// Marginal of the Euler class over its first slot, in closed form:
///   integral e(t, b, c) dmu(t) = 1 - ((c - b) mod 2pi) / pi,
/// and 0 when b == c. The two arcs cut by (b, c) carry opposite signs, so
/// the integral is their normalized length difference.
double euler_marginal(CirclePoint b, CirclePoint c);

/// Triple integral  integral e(t0, t1, t2) m1(t1) m2(t2) dmu^3  via the
/// primitive identity: equals 2 * <F1, m2> where F1 is the zero-mean
/// primitive of m1 with respect to dmu. Nonzero only for equal frequencies
/// and opposite phases: (cos k, sin k) -> amp1*amp2/(2 pi k).
double euler_trig_triple(const TrigMonomial& m1, const TrigMonomial& m2);

/// Amplitude-1 core of euler_trig_triple.
double euler_trig_triple_unit(int k1, Phase p1, int k2, Phase p2);

}  // namespace calibra
