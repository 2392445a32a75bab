#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace calibra {

/// Exact rational arithmetic for cocycle values.
///
/// Values arising here are averages of +-1 terms over permutation sums, so
/// denominators divide (2n+1)! and everything fits comfortably in 64 bits.
/// All products and cross terms go through 128-bit intermediates and throw
/// on overflow instead of rounding; no operation ever loses exactness.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t value) : num_(value) {}
    ExactRational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("ExactRational: zero denominator");
        normalize();
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    ExactRational operator-() const { return ExactRational(-num_, den_, raw_tag{}); }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        __int128 num = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 den = i128(a.den_) * b.den_;
        return from_i128(num, den);
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        return a + (-b);
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }

    ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
    ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }
    ExactRational& operator*=(const ExactRational& o) { return *this = *this * o; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const ExactRational& a, const ExactRational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) {
        return !(b < a);
    }

    ExactRational abs() const { return num_ < 0 ? -*this : *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct raw_tag {};
    ExactRational(std::int64_t num, std::int64_t den, raw_tag) : num_(num), den_(den) {}

    using i128 = __int128;

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static ExactRational from_i128(i128 num, i128 den) {
        if (den < 0) { num = -num; den = -den; }
        i128 a = num < 0 ? -num : num, b = den;
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        constexpr i128 lim = INT64_MAX;
        if (num > lim || num < -lim || den > lim)
            throw std::overflow_error("ExactRational: 64-bit overflow");
        return ExactRational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), raw_tag{});
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace calibra
