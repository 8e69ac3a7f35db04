#pragma once

#include <string>

#include "support/bigfloat.hpp"

namespace gzp {

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(long prec = BigFloat::kDefaultPrec) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(long r) : re(BigFloat::of(r)), im(BigFloat::of(0L)) {}

    static BigComplex of(double r, double i = 0.0, long prec = BigFloat::kDefaultPrec) {
        return {BigFloat::of(r, prec), BigFloat::of(i, prec)};
    }
    static BigComplex of(const GQ& z, long prec = BigFloat::kDefaultPrec) {
        return {BigFloat::of(z.re, prec), BigFloat::of(z.im, prec)};
    }
    static BigComplex i_unit(long prec = BigFloat::kDefaultPrec) {
        return {BigFloat::of(0L, prec), BigFloat::of(1L, prec)};
    }
    static BigComplex two_pi_i(long prec = BigFloat::kDefaultPrec) {
        return {BigFloat::of(0L, prec), BigFloat::pi(prec) * BigFloat::of(2L, prec)};
    }

    long prec() const { return re.prec() < im.prec() ? re.prec() : im.prec(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    BigComplex& operator+=(const BigComplex& b) { *this = *this + b; return *this; }
    BigComplex& operator-=(const BigComplex& b) { *this = *this - b; return *this; }
    BigComplex& operator*=(const BigComplex& b) { *this = *this * b; return *this; }
    BigComplex& operator/=(const BigComplex& b) { *this = *this / b; return *this; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

    BigComplex conj() const { return {re, -im}; }
    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
    // Principal argument in (-pi, pi].
    friend BigFloat arg(const BigComplex& a) { return atan2(a.im, a.re); }

    friend BigComplex sqrt(const BigComplex& a) {
        // principal branch
        BigFloat r = abs(a);
        if (r.is_zero()) return BigComplex(a.prec());
        BigFloat half = BigFloat::of(0.5, a.prec());
        BigFloat m = sqrt(r);
        BigFloat th = arg(a) * half;
        return {m * cos(th), m * sin(th)};
    }
    friend BigComplex exp(const BigComplex& a) {
        BigFloat m = exp(a.re);
        return {m * cos(a.im), m * sin(a.im)};
    }
    // Principal logarithm.
    friend BigComplex log(const BigComplex& a) { return {log(abs(a)), arg(a)}; }

    BigComplex pow_si(long e) const {
        long p = prec();
        BigComplex base = *this, acc = BigComplex::of(1.0, 0.0, p);
        bool invert = e < 0;
        unsigned long n = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                                 : static_cast<unsigned long>(e);
        while (n) {
            if (n & 1UL) acc *= base;
            base *= base;
            n >>= 1;
        }
        if (invert) return BigComplex::of(1.0, 0.0, p) / acc;
        return acc;
    }

    std::string str(size_t digits = 0) const {
        return "(" + re.str(digits) + ", " + im.str(digits) + ")";
    }
};

using BC = BigComplex;

inline BigFloat dist(const BigComplex& a, const BigComplex& b) { return abs(a - b); }

}  // namespace gzp
