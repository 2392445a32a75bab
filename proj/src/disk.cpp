#include "calibra/disk.hpp"

#include <cmath>

namespace calibra {

double poisson_kernel(const DiskPoint& x, CirclePoint theta) {
    if (x.abs2() == 0.0) return 1.0;  // basepoint: the kernel is identically 1
    const std::complex<double> boundary = std::polar(1.0, theta.angle());
    return (1.0 - x.abs2()) / std::norm(x.z() - boundary);
}

double busemann(const DiskPoint& x, CirclePoint theta) {
    return -std::log(poisson_kernel(x, theta));
}

double entropy_locally_symmetric(int n) {
    if (n < 1) throw std::invalid_argument("entropy_locally_symmetric: n must be >= 1");
    return std::sqrt(static_cast<double>(n));
}

namespace {

// Matrix form z -> (alpha z + beta) / (conj(beta) z + conj(alpha)); the
// composition of two (a, phi) automorphisms stays in this family.
struct MoebiusPair {
    std::complex<double> alpha, beta;
};

MoebiusPair to_pair(const DiskAutomorphism& m) {
    const std::complex<double> h = std::polar(1.0, m.phi() / 2.0);
    return {h, -h * m.a().z()};
}

DiskAutomorphism from_pair(const MoebiusPair& p) {
    const std::complex<double> a = -p.beta / p.alpha;
    const double phi = 2.0 * std::arg(p.alpha);
    return DiskAutomorphism(DiskPoint(a), phi);
}

}  // namespace

DiskAutomorphism DiskAutomorphism::inverse() const {
    const MoebiusPair p = to_pair(*this);
    return from_pair({std::conj(p.alpha), -p.beta});
}

DiskAutomorphism operator*(const DiskAutomorphism& m1, const DiskAutomorphism& m2) {
    const MoebiusPair p1 = to_pair(m1), p2 = to_pair(m2);
    return from_pair({p1.alpha * p2.alpha + p1.beta * std::conj(p2.beta),
                      p1.alpha * p2.beta + p1.beta * std::conj(p2.alpha)});
}

CirclePoint boundary_action(const DiskAutomorphism& m, CirclePoint theta) {
    if (m.a().z() == std::complex<double>(0.0, 0.0))
        return CirclePoint(theta.angle() + m.phi());  // pure rotation
    const std::complex<double> image = m.apply(std::polar(1.0, theta.angle()));
    return CirclePoint(std::arg(image));
}

double boundary_jacobian(const DiskAutomorphism& m, CirclePoint theta) {
    // |m'(e^{i theta})| = (1 - |a|^2) / |e^{i theta} - a|^2 = p_o(a, theta)
    return poisson_kernel(m.a(), theta);
}

TorusPoint ProductAutomorphism::apply(const TorusPoint& theta) const {
    if (theta.n() != n()) throw std::invalid_argument("ProductAutomorphism: dimension mismatch");
    std::vector<CirclePoint> out;
    out.reserve(parts_.size());
    for (int i = 0; i < n(); ++i) out.push_back(boundary_action(parts_[i], theta[i]));
    return TorusPoint(std::move(out));
}

PolyDiskPoint ProductAutomorphism::apply(const PolyDiskPoint& x) const {
    if (x.n() != n()) throw std::invalid_argument("ProductAutomorphism: dimension mismatch");
    std::vector<DiskPoint> out;
    out.reserve(parts_.size());
    for (int i = 0; i < n(); ++i) out.push_back(parts_[i].apply(x[i]));
    return PolyDiskPoint(std::move(out));
}

ProductAutomorphism ProductAutomorphism::inverse() const {
    std::vector<DiskAutomorphism> out;
    out.reserve(parts_.size());
    for (const auto& m : parts_) out.push_back(m.inverse());
    return ProductAutomorphism(std::move(out));
}

}  // namespace calibra
