#pragma once

#include <complex>
#include <vector>

#include "calibra/circle.hpp"

namespace calibra {

/// Points closer than this to the unit circle are rejected: the Poisson
/// kernel blows up like 1/dist^2 there.
inline constexpr double boundary_margin = 1e-9;

/// Point of the open Poincare disk, |z| < 1 - boundary_margin.
class DiskPoint {
public:
    DiskPoint() = default;  // origin
    DiskPoint(double re, double im) : DiskPoint(std::complex<double>(re, im)) {}
    explicit DiskPoint(std::complex<double> z) : z_(z) {
        if (std::norm(z_) >= (1.0 - boundary_margin) * (1.0 - boundary_margin))
            throw std::domain_error("DiskPoint: too close to the boundary circle");
    }

    std::complex<double> z() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    double abs2() const { return std::norm(z_); }

private:
    std::complex<double> z_{0.0, 0.0};
};

/// Point of the polydisk (H^2)^n, one disk coordinate per factor.
class PolyDiskPoint {
public:
    explicit PolyDiskPoint(std::vector<DiskPoint> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("PolyDiskPoint: n must be >= 1");
    }

    static PolyDiskPoint origin(int n) {
        if (n < 1) throw std::invalid_argument("PolyDiskPoint: n must be >= 1");
        return PolyDiskPoint(std::vector<DiskPoint>(static_cast<std::size_t>(n)));
    }

    int n() const { return static_cast<int>(factors_.size()); }
    const DiskPoint& operator[](int i) const { return factors_[static_cast<std::size_t>(i)]; }
    std::span<const DiskPoint> factors() const { return factors_; }

private:
    std::vector<DiskPoint> factors_;
};

/// p_o(x, theta) = (1 - |x|^2) / |x - e^{i theta}|^2.
double poisson_kernel(const DiskPoint& x, CirclePoint theta);

/// Busemann function at the basepoint: -log p_o(x, theta).
double busemann(const DiskPoint& x, CirclePoint theta);

/// Volume entropy sqrt(n) of the product of n hyperbolic planes.
double entropy_locally_symmetric(int n);

/// Disk automorphism z -> e^{i phi} (z - a) / (1 - conj(a) z).
///
/// Sends a to 0, preserves the open disk, and acts on the boundary circle
/// preserving orientation. The (a, phi) parameterization gives a closed-form
/// boundary derivative and composes without normalization drift.
class DiskAutomorphism {
public:
    DiskAutomorphism() = default;  // identity
    DiskAutomorphism(DiskPoint a, double phi) : a_(a), phi_(CirclePoint::reduce(phi)) {}

    const DiskPoint& a() const { return a_; }
    double phi() const { return phi_; }

    std::complex<double> apply(std::complex<double> z) const {
        return std::polar(1.0, phi_) * (z - a_.z()) / (1.0 - std::conj(a_.z()) * z);
    }
    DiskPoint apply(const DiskPoint& x) const { return DiskPoint(apply(x.z())); }

    DiskAutomorphism inverse() const;
    friend DiskAutomorphism operator*(const DiskAutomorphism& m1, const DiskAutomorphism& m2);

private:
    DiskPoint a_;
    double phi_ = 0.0;
};

/// Image angle of e^{i theta} under the boundary circle map of m.
CirclePoint boundary_action(const DiskAutomorphism& m, CirclePoint theta);

/// Derivative |m'(e^{i theta})| of the circle map; equals p_o(m^{-1}(0), theta)
/// and integrates to 1 against dtheta/2pi.
double boundary_jacobian(const DiskAutomorphism& m, CirclePoint theta);

/// Factor-wise automorphism of the polydisk, acting diagonally on the torus.
class ProductAutomorphism {
public:
    explicit ProductAutomorphism(std::vector<DiskAutomorphism> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("ProductAutomorphism: n must be >= 1");
    }

    static ProductAutomorphism identity(int n) {
        return ProductAutomorphism(std::vector<DiskAutomorphism>(static_cast<std::size_t>(n)));
    }

    int n() const { return static_cast<int>(parts_.size()); }
    const DiskAutomorphism& operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    TorusPoint apply(const TorusPoint& theta) const;
    PolyDiskPoint apply(const PolyDiskPoint& x) const;
    ProductAutomorphism inverse() const;

private:
    std::vector<DiskAutomorphism> parts_;
};

}  // namespace calibra
