#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace calibra {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Angle on S^1 = R/2piZ. The circle carries the normalized measure
/// dtheta/2pi throughout the library.
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(double angle) : angle_(reduce(angle)) {}

    double angle() const { return angle_; }

    friend bool operator==(CirclePoint a, CirclePoint b) { return a.angle_ == b.angle_; }
    friend bool operator!=(CirclePoint a, CirclePoint b) { return a.angle_ != b.angle_; }

    /// Reduce into [0, 2pi).
    static double reduce(double a) {
        double r = std::fmod(a, two_pi);
        if (r < 0.0) r += two_pi;
        if (r >= two_pi) r = 0.0;  // fmod rounding can land exactly on 2pi
        return r;
    }

private:
    double angle_ = 0.0;
};

/// Point on the n-torus (S^1)^n, one circle coordinate per factor.
class TorusPoint {
public:
    explicit TorusPoint(std::vector<CirclePoint> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw std::invalid_argument("TorusPoint: n must be >= 1");
    }

    static TorusPoint from_angles(std::span<const double> angles) {
        std::vector<CirclePoint> c;
        c.reserve(angles.size());
        for (double a : angles) c.emplace_back(a);
        return TorusPoint(std::move(c));
    }

    int n() const { return static_cast<int>(coords_.size()); }
    CirclePoint operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    std::span<const CirclePoint> coords() const { return coords_; }

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
        return a.coords_ == b.coords_;
    }

private:
    std::vector<CirclePoint> coords_;
};

}  // namespace calibra
