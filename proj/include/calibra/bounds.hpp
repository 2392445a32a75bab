#pragma once

#include <cstdint>
#include <optional>

namespace calibra {

/// Inputs for the bound calculators.
struct BoundQuery {
    int n = 1;
    std::optional<double> h_g;
    std::optional<double> vol_y;
    std::optional<double> vol_m;
    std::optional<double> vol_g0;
};

/// MinVol(M) >= (sqrt(n)/(2n-1))^{2n} Vol(g0), computed as
/// n^n / (2n-1)^{2n} * vol_g0 so small cases stay exact.
double minvol_bound(int n, double vol_g0);

/// Largest |deg f| compatible with h^{2n} Vol(Y) >= |deg f| n^n Vol(M):
/// floor of the ratio, with a 1e-9 relative nudge absorbing roundoff at
/// integer ratios.
std::int64_t degree_bound(int n, double h_g, double vol_y, double vol_m);
std::int64_t degree_bound(const BoundQuery& q);

/// Entropy bound 2n-1 under |K| <= 1 (Bishop comparison with H^{2n}).
double curvature_entropy_bound(int n);

}  // namespace calibra
