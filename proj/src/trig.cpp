#include "calibra/trig.hpp"

#include <cmath>
#include <stdexcept>

namespace calibra {

namespace {

bool in_halfspace(std::span<const int> k) {
    for (int v : k) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return false;  // zero vector
}

}  // namespace

FourierIndex::FourierIndex(std::vector<int> k) : k_(std::move(k)) {
    if (!in_halfspace(k_))
        throw std::invalid_argument("FourierIndex: not in the half-space I");
}

std::pair<FourierIndex, int> FourierIndex::fold(std::span<const int> k) {
    std::vector<int> v(k.begin(), k.end());
    if (in_halfspace(v)) return {FourierIndex(std::move(v)), 1};
    for (int& x : v) x = -x;
    return {FourierIndex(std::move(v)), -1};
}

bool FourierIndex::single_axis(int& axis, int& freq) const {
    int found = -1;
    for (int i = 0; i < n(); ++i) {
        if (k_[static_cast<std::size_t>(i)] != 0) {
            if (found >= 0) return false;
            found = i;
        }
    }
    axis = found;
    freq = k_[static_cast<std::size_t>(found)];
    return true;
}

double FourierIndex::dot(const TorusPoint& theta) const {
    double s = 0.0;
    for (int i = 0; i < n(); ++i) s += k_[static_cast<std::size_t>(i)] * theta[i].angle();
    return s;
}

TrigPolynomial::TrigPolynomial(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("TrigPolynomial: n must be >= 1");
}

void TrigPolynomial::add(std::span<const int> k, double cos_coef, double sin_coef) {
    if (static_cast<int>(k.size()) != n_)
        throw std::invalid_argument("TrigPolynomial: frequency vector has wrong length");
    auto [idx, sign] = FourierIndex::fold(k);
    auto& t = terms_[idx];
    t[0] += cos_coef;
    t[1] += sign * sin_coef;
    if (t[0] == 0.0 && t[1] == 0.0) terms_.erase(idx);
}

double TrigPolynomial::coefficient(const FourierIndex& k, Phase p) const {
    auto it = terms_.find(k);
    if (it == terms_.end()) return 0.0;
    return it->second[static_cast<std::size_t>(p)];
}

double TrigPolynomial::operator()(const TorusPoint& theta) const {
    double v = constant_;
    for (const auto& [k, ab] : terms_) {
        const double arg = k.dot(theta);
        v += ab[0] * std::cos(arg) + ab[1] * std::sin(arg);
    }
    return v;
}

TrigPolynomial& TrigPolynomial::operator*=(double s) {
    constant_ *= s;
    for (auto& [k, ab] : terms_) {
        ab[0] *= s;
        ab[1] *= s;
    }
    return *this;
}

TrigPolynomial& TrigPolynomial::add_scaled(const TrigPolynomial& g, double s) {
    if (g.n_ != n_) throw std::invalid_argument("TrigPolynomial: dimension mismatch");
    constant_ += s * g.constant_;
    for (const auto& [k, ab] : g.terms_) {
        auto& t = terms_[k];
        t[0] += s * ab[0];
        t[1] += s * ab[1];
    }
    return *this;
}

double inner_product(const TrigPolynomial& f, const TrigPolynomial& g) {
    if (f.n() != g.n()) throw std::invalid_argument("inner_product: dimension mismatch");
    double s = f.constant() * g.constant();
    const auto& a = f.terms();
    const auto& b = g.terms();
    // iterate over the smaller map
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (const auto& [k, ab] : small) {
        auto it = large.find(k);
        if (it == large.end()) continue;
        s += 0.5 * (ab[0] * it->second[0] + ab[1] * it->second[1]);
    }
    return s;
}

double l2_norm(const TrigPolynomial& f) { return std::sqrt(inner_product(f, f)); }

Frame Frame::make(std::vector<TrigPolynomial> fs, double tol) {
    if (fs.empty() || fs.size() % 2 != 0)
        throw std::invalid_argument("Frame: need 2n functions");
    const int dim = fs.front().n();
    const int n = static_cast<int>(fs.size()) / 2;
    if (dim != n)
        throw std::invalid_argument("Frame: 2n functions on T^n expected");
    double defect = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].n() != dim) throw std::invalid_argument("Frame: mixed torus dimensions");
        if (!fs[i].zero_mean()) throw std::invalid_argument("Frame: functions must be zero-mean");
        for (std::size_t j = i; j < fs.size(); ++j) {
            const double want = i == j ? 1.0 : 0.0;
            defect = std::max(defect, std::abs(inner_product(fs[i], fs[j]) - want));
        }
    }
    if (defect > tol) throw std::invalid_argument("Frame: not orthonormal within tolerance");
    return Frame(std::move(fs), n, defect);
}

Frame standard_frame(int n) {
    if (n < 1) throw std::invalid_argument("standard_frame: n must be >= 1");
    const double r2 = std::sqrt(2.0);
    std::vector<TrigPolynomial> fs;
    fs.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> k(static_cast<std::size_t>(n), 0);
        k[static_cast<std::size_t>(i)] = 1;
        TrigPolynomial fc(n), fsin(n);
        fc.add(k, r2, 0.0);
        fsin.add(k, 0.0, r2);
        fs.push_back(std::move(fc));
        fs.push_back(std::move(fsin));
    }
    return Frame::make(std::move(fs));
}

}  // namespace calibra
