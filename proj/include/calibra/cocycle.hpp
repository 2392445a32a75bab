#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "calibra/circle.hpp"
#include "calibra/disk.hpp"
#include "calibra/rational.hpp"

namespace calibra {

/// Orientation cocycle of the circle: +1 if (a, b, c) is positively
/// cyclically ordered, -1 if negatively, 0 if any two points coincide.
/// Degenerate triples sit on a measure-zero set; returning 0 there keeps
/// alternation exact and integration unbiased.
int euler_class(CirclePoint a, CirclePoint b, CirclePoint c);

struct SignedPermutation {
    std::vector<int> perm;
    int sign = 1;
};

/// All permutations of {0, ..., m-1} with signs, in lexicographic order.
std::vector<SignedPermutation> all_permutations(int m);

std::int64_t factorial(int m);

/// Alternated product of n Euler classes on a (2n+1)-tuple of torus points:
///   C = 1/(2n+1)! * sum_sigma sign(sigma) prod_i e(theta^i_{sigma(2i-2)},
///       theta^i_{sigma(2i-1)}, theta^i_{sigma(2i)}).
/// Exact; |C| <= 1.
ExactRational cocycle(std::span<const TorusPoint> pts);

/// cocycle() as a double, for Monte Carlo inner loops.
double cocycle_value(std::span<const TorusPoint> pts);

/// Alternating sum  sum_i (-1)^i C(..., hat theta_i, ...)  on a (2n+2)-tuple.
/// Identically the exact rational 0.
ExactRational coboundary(std::span<const TorusPoint> pts);

/// C(g theta_0, ..., g theta_2n) - C(theta_0, ..., theta_2n); exactly 0
/// because the boundary action preserves cyclic order on every factor.
ExactRational invariance_residual(const ProductAutomorphism& g, std::span<const TorusPoint> pts);

/// Permutations sigma of {0..2n} with {2i-1, 2i} contained in
/// {sigma(2i-2), sigma(2i-1), sigma(2i)} for every i = 1..n. These are the
/// only permutations whose term survives integration against the tangent
/// frame; there are exactly 2^n (2n+1) of them. Requires n <= 4.
std::vector<SignedPermutation> suitable_permutations(int n);

}  // namespace calibra
