#pragma once

#include <vector>

#include "calibra/disk.hpp"
#include "calibra/trig.hpp"

namespace calibra {

/// Phi_0(x)(theta) = prod_i sqrt(p_o(x^i, theta^i)), the unit-sphere
/// embedding of the polydisk into L^2(T^n).
double phi0_evaluate(const PolyDiskPoint& x, const TorusPoint& theta);

/// Symmetric 2n x 2n matrix of L2 inner products of partial derivatives.
struct GramMatrix {
    int dim = 0;
    std::vector<double> entries;  // row-major

    double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
    double det() const;
};

/// Gram matrix of the differential of Phi_0 at x in the coordinate
/// directions (Re, Im) per factor. Central finite differences with
/// Richardson extrapolation (steps h, h/2) in x; 2048-node circle
/// quadrature per factor, combined through the product structure.
/// step must lie in [1e-6, 1e-3].
GramMatrix pullback_metric(const PolyDiskPoint& x, double step = 1e-4);

/// sqrt(det pullback_metric) divided by the hyperbolic volume density
/// prod_i 4/(1-|x^i|^2)^2. Constant (1/8)^n over the polydisk.
double volume_density_ratio(const PolyDiskPoint& x);

struct TangentFrameReport {
    double span_residual = 0.0;  ///< worst relative L2 distance of a differential to the span
    double scale_error = 0.0;    ///< worst deviation of projection coefficients from 1/sqrt2
};

/// The frame (sqrt2 cos theta^i, sqrt2 sin theta^i) spanning the tangent of
/// the embedding at the basepoint. `report`, when given, receives the
/// finite-difference check that the differentials of Phi_0 at the origin lie
/// in this span (Fourier modes up to kmax) with the scale implied by the
/// pullback metric.
Frame tangent_frame_at_origin(int n, TangentFrameReport* report = nullptr, int kmax = 4);

/// Max over a grid on T^n of
///   |Phi_0(g x)(theta) - Phi_0(x)(g^{-1} theta) prod_i sqrt(p_o(g o^i, theta^i))|.
/// Zero by equivariance of the kernel family. grid >= 32 nodes per axis,
/// n <= 2.
double equivariance_residual(const ProductAutomorphism& g, const PolyDiskPoint& x, int grid);

}  // namespace calibra
