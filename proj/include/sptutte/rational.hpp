#pragma once

#include <gmp.h>

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "sptutte/errors.hpp"

namespace sptutte {

// Arbitrary-precision rational number, always stored in lowest terms with a
// positive denominator. Arithmetic is exact; division by zero throws
// ArithmeticError instead of crashing. Backed by GMP's mpq layer.
class Rational {
public:
    Rational() { mpq_init(v_); }

    Rational(long long n) { // NOLINT: implicit by design, enables integer literals
        mpq_init(v_);
        set_ll(mpq_numref(v_), n);
    }

    Rational(long long num, long long den) {
        mpq_init(v_);
        if (den == 0) {
            mpq_clear(v_);
            throw ArithmeticError("rational with zero denominator");
        }
        set_ll(mpq_numref(v_), num);
        set_ll(mpq_denref(v_), den);
        mpq_canonicalize(v_);
    }

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }

    ~Rational() { mpq_clear(v_); }

    // Accepts: optional sign, then "123", "4/5", "1.25", or a decimal with an
    // exponent ("5e-2", "1.2E3"). All forms convert exactly.
    static Rational from_string(std::string_view s);

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }

    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    Rational numerator() const {
        Rational r;
        mpq_set_z(r.v_, mpq_numref(v_));
        return r;
    }

    Rational denominator() const {
        Rational r;
        mpq_set_z(r.v_, mpq_denref(v_));
        return r;
    }

    // Exact integer power; negative exponents invert (zero base throws).
    Rational pow(long long e) const {
        Rational base = *this;
        if (e < 0) {
            if (base.is_zero()) throw ArithmeticError("zero raised to a negative power");
            mpq_inv(base.v_, base.v_);
            e = -e;
        }
        Rational r;
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), static_cast<unsigned long>(e));
        return r; // coprime bases stay coprime under powers
    }

    double to_double() const { return mpq_get_d(v_); }

    // "num/den" in lowest terms, or just "num" when the denominator is 1.
    std::string str() const {
        char* raw = mpq_get_str(nullptr, 10, v_);
        std::string out(raw);
        void (*freefunc)(void*, size_t) = nullptr;
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(raw, std::strlen(raw) + 1);
        return out;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ArithmeticError("division by zero");
        Rational r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }

    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }

    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ArithmeticError("division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }

    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    static void set_ll(mpz_ptr z, long long v) {
        static_assert(sizeof(long long) == sizeof(long), "expects LP64");
        mpz_set_si(z, static_cast<long>(v));
    }

    mpq_t v_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

inline void set_mpz_digits(mpz_ptr z, std::string_view digits, std::string_view original) {
    if (!all_digits(digits)) {
        throw ParseError("invalid number literal: \"" + std::string(original) + "\"");
    }
    std::string tmp(digits);
    if (mpz_set_str(z, tmp.c_str(), 10) != 0) {
        throw ParseError("invalid number literal: \"" + std::string(original) + "\"");
    }
}

} // namespace detail

inline Rational Rational::from_string(std::string_view s) {
    const std::string_view original = s;
    if (s.empty()) throw ParseError("empty number literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = (s.front() == '-');
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("invalid number literal: \"" + std::string(original) + "\"");

    Rational r;

    const auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        detail::set_mpz_digits(mpq_numref(r.v_), s.substr(0, slash), original);
        detail::set_mpz_digits(mpq_denref(r.v_), s.substr(slash + 1), original);
        if (mpz_sgn(mpq_denref(r.v_)) == 0) {
            throw ParseError("zero denominator in \"" + std::string(original) + "\"");
        }
        mpq_canonicalize(r.v_);
    } else {
        std::string_view mantissa = s;
        long exponent = 0;
        const auto epos = s.find_first_of("eE");
        if (epos != std::string_view::npos) {
            mantissa = s.substr(0, epos);
            std::string_view etext = s.substr(epos + 1);
            bool eneg = false;
            if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
                eneg = (etext.front() == '-');
                etext.remove_prefix(1);
            }
            if (!detail::all_digits(etext) || etext.size() > 4) {
                throw ParseError("invalid exponent in \"" + std::string(original) + "\"");
            }
            exponent = std::strtol(std::string(etext).c_str(), nullptr, 10);
            if (eneg) exponent = -exponent;
        }

        std::string digits;
        long scale = 0;
        const auto dot = mantissa.find('.');
        if (dot != std::string_view::npos) {
            const std::string_view ipart = mantissa.substr(0, dot);
            const std::string_view fpart = mantissa.substr(dot + 1);
            if (ipart.empty() && fpart.empty()) {
                throw ParseError("invalid number literal: \"" + std::string(original) + "\"");
            }
            if (!ipart.empty() && !detail::all_digits(ipart)) {
                throw ParseError("invalid number literal: \"" + std::string(original) + "\"");
            }
            if (!fpart.empty() && !detail::all_digits(fpart)) {
                throw ParseError("invalid number literal: \"" + std::string(original) + "\"");
            }
            digits = std::string(ipart) + std::string(fpart);
            scale = static_cast<long>(fpart.size());
        } else {
            if (!detail::all_digits(mantissa)) {
                throw ParseError("invalid number literal: \"" + std::string(original) + "\"");
            }
            digits = std::string(mantissa);
        }
        if (digits.empty()) digits = "0";

        detail::set_mpz_digits(mpq_numref(r.v_), digits, original);
        const long net = exponent - scale; // value = digits * 10^net
        if (net > 0) {
            mpz_t p;
            mpz_init(p);
            mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(net));
            mpz_mul(mpq_numref(r.v_), mpq_numref(r.v_), p);
            mpz_clear(p);
        } else if (net < 0) {
            mpz_ui_pow_ui(mpq_denref(r.v_), 10, static_cast<unsigned long>(-net));
        }
        mpq_canonicalize(r.v_);
    }

    if (negative) mpq_neg(r.v_, r.v_);
    return r;
}

} // namespace sptutte
