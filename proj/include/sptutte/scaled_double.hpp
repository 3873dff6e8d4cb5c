#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>

#include "sptutte/errors.hpp"
#include "sptutte/rational.hpp"

namespace sptutte {

// Floating-point scalar with a double mantissa and a 64-bit binary exponent.
// Partition-function values grow like q^|V|, which overflows a plain double
// long before the graph sizes the float benchmark runs at; the wide exponent
// keeps every intermediate finite while arithmetic stays O(1).
class ScaledDouble {
public:
    ScaledDouble() = default;

    ScaledDouble(int v) : ScaledDouble(static_cast<double>(v)) {} // NOLINT: implicit by design

    explicit ScaledDouble(double v) {
        if (!std::isfinite(v)) throw ArithmeticError("non-finite value");
        int e = 0;
        m_ = std::frexp(v, &e);
        e_ = (m_ == 0.0) ? 0 : e;
        if (m_ == 0.0) m_ = 0.0; // canonical zero, clears -0.0
    }

    bool is_zero() const { return m_ == 0.0; }

    // May overflow/underflow to inf/0 when the exponent exceeds double range.
    double to_double() const {
        if (m_ == 0.0) return 0.0;
        if (e_ > 1 << 16) return m_ > 0 ? HUGE_VAL : -HUGE_VAL;
        if (e_ < -(1 << 16)) return 0.0;
        return std::ldexp(m_, static_cast<int>(e_));
    }

    double mantissa() const { return m_; }
    long long exponent() const { return e_; }

    friend ScaledDouble operator+(const ScaledDouble& a, const ScaledDouble& b) {
        if (a.m_ == 0.0) return b;
        if (b.m_ == 0.0) return a;
        const ScaledDouble& hi = (a.e_ >= b.e_) ? a : b;
        const ScaledDouble& lo = (a.e_ >= b.e_) ? b : a;
        const long long diff = hi.e_ - lo.e_;
        if (diff > 64) return hi; // lo is below one ulp of hi
        return make(hi.m_ + std::ldexp(lo.m_, -static_cast<int>(diff)), hi.e_);
    }

    friend ScaledDouble operator-(const ScaledDouble& a, const ScaledDouble& b) {
        return a + (-b);
    }

    friend ScaledDouble operator*(const ScaledDouble& a, const ScaledDouble& b) {
        if (a.m_ == 0.0 || b.m_ == 0.0) return ScaledDouble();
        return make(a.m_ * b.m_, a.e_ + b.e_);
    }

    friend ScaledDouble operator/(const ScaledDouble& a, const ScaledDouble& b) {
        if (b.m_ == 0.0) throw ArithmeticError("division by zero");
        if (a.m_ == 0.0) return ScaledDouble();
        return make(a.m_ / b.m_, a.e_ - b.e_);
    }

    ScaledDouble operator-() const {
        ScaledDouble r = *this;
        r.m_ = -r.m_;
        return r;
    }

    ScaledDouble& operator+=(const ScaledDouble& o) { return *this = *this + o; }
    ScaledDouble& operator-=(const ScaledDouble& o) { return *this = *this - o; }
    ScaledDouble& operator*=(const ScaledDouble& o) { return *this = *this * o; }
    ScaledDouble& operator/=(const ScaledDouble& o) { return *this = *this / o; }

    friend bool operator==(const ScaledDouble& a, const ScaledDouble& b) {
        return a.m_ == b.m_ && a.e_ == b.e_;
    }

    friend bool operator!=(const ScaledDouble& a, const ScaledDouble& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ScaledDouble& v) {
        if (v.e_ > -900 && v.e_ < 900) return os << v.to_double();
        return os << v.m_ << "*2^" << v.e_;
    }

private:
    static ScaledDouble make(double m, long long e) {
        ScaledDouble r;
        if (m == 0.0) return r;
        int shift = 0;
        r.m_ = std::frexp(m, &shift);
        r.e_ = e + shift;
        return r;
    }

    double m_ = 0.0;    // 0, or sign-carrying mantissa with |m_| in [0.5, 1)
    long long e_ = 0;
};

inline ScaledDouble to_scaled(const Rational& r) { return ScaledDouble(r.to_double()); }

} // namespace sptutte
