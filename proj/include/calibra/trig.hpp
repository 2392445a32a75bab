#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "calibra/circle.hpp"

namespace calibra {

enum class Phase : int { cos = 0, sin = 1 };

inline Phase opposite(Phase p) { return p == Phase::cos ? Phase::sin : Phase::cos; }

/// amplitude * cos(k theta) or amplitude * sin(k theta) on one circle, k >= 1.
struct TrigMonomial {
    int k = 1;
    Phase phase = Phase::cos;
    double amplitude = 1.0;

    double operator()(double theta) const {
        double arg = k * theta;
        return amplitude * (phase == Phase::cos ? std::cos(arg) : std::sin(arg));
    }
};

/// Frequency vector K in the half-space I: K != 0 and the first nonzero
/// coordinate is positive. Indexes one Fourier mode of the n-torus.
class FourierIndex {
public:
    /// Requires k already in I.
    explicit FourierIndex(std::vector<int> k);

    /// Folds an arbitrary nonzero vector into I. Returns the index together
    /// with the sign picked up by sin terms (cos is even, sin is odd).
    static std::pair<FourierIndex, int> fold(std::span<const int> k);

    int n() const { return static_cast<int>(k_.size()); }
    std::span<const int> k() const { return k_; }
    int operator[](int i) const { return k_[static_cast<std::size_t>(i)]; }

    /// If K = k e_axis with k >= 1, reports (axis, k).
    bool single_axis(int& axis, int& freq) const;

    double dot(const TorusPoint& theta) const;

    friend bool operator==(const FourierIndex& a, const FourierIndex& b) { return a.k_ == b.k_; }
    friend bool operator<(const FourierIndex& a, const FourierIndex& b) { return a.k_ < b.k_; }

private:
    std::vector<int> k_;
};

/// Real trigonometric polynomial on T^n:
///   f(theta) = c + sum_{K in I} a_K cos(K.theta) + b_K sin(K.theta).
/// Coefficients are plain cos/sin amplitudes; L2 inner products carry the
/// 1/2 weight of the trig basis (so the unit-norm modes are sqrt2 cos,
/// sqrt2 sin). Zero-mean iff c = 0.
class TrigPolynomial {
public:
    explicit TrigPolynomial(int n);

    int n() const { return n_; }

    double constant() const { return constant_; }
    void set_constant(double c) { constant_ = c; }

    /// Adds a_K cos(k.theta) + b_K sin(k.theta), folding k into I.
    void add(std::span<const int> k, double cos_coef, double sin_coef);

    double coefficient(const FourierIndex& k, Phase p) const;

    const std::map<FourierIndex, std::array<double, 2>>& terms() const { return terms_; }

    bool zero_mean() const { return constant_ == 0.0; }

    double operator()(const TorusPoint& theta) const;

    TrigPolynomial& operator*=(double s);
    TrigPolynomial& add_scaled(const TrigPolynomial& g, double s);

private:
    int n_;
    double constant_ = 0.0;
    std::map<FourierIndex, std::array<double, 2>> terms_;
};

/// <f, g> = c_f c_g + 1/2 sum_K (a. a + b. b).
double inner_product(const TrigPolynomial& f, const TrigPolynomial& g);
double l2_norm(const TrigPolynomial& f);

inline constexpr double tol_ortho = 1e-10;

/// Ordered family of 2n zero-mean trig polynomials on T^n, certified
/// orthonormal: max_ij |<f_i, f_j> - delta_ij| <= tol at construction.
class Frame {
public:
    static Frame make(std::vector<TrigPolynomial> fs, double tol = tol_ortho);

    int n() const { return n_; }
    std::span<const TrigPolynomial> functions() const { return fs_; }
    const TrigPolynomial& operator[](int i) const { return fs_[static_cast<std::size_t>(i)]; }

    /// Orthonormality certificate recorded at construction.
    double ortho_defect() const { return defect_; }

private:
    Frame(std::vector<TrigPolynomial> fs, int n, double defect)
        : fs_(std::move(fs)), n_(n), defect_(defect) {}

    std::vector<TrigPolynomial> fs_;
    int n_;
    double defect_;
};

/// The tangent frame of the Poisson embedding at the basepoint:
/// (sqrt2 cos theta^i, sqrt2 sin theta^i) for i = 1..n.
Frame standard_frame(int n);

}  // namespace calibra
