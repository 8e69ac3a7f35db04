#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

#include "support/errors.hpp"

namespace gzp {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class does not canonicalize on (num, den) construction; all entry
// points below do.
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw Error(ErrorKind::InputError, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::InputError, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p/q", optional whitespace-free decimal like "1.25".
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::InputError, "empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        Integer num;
        if (num.set_str(digits, 10) != 0)
            throw Error(ErrorKind::InputError, "bad rational literal: " + s);
        Integer den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return rat(num, den);
    }
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw Error(ErrorKind::InputError, "bad rational literal: " + s);
    if (q.get_den() == 0)
        throw Error(ErrorKind::InputError, "zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact complex scalar: Q(i). Canonical form is inherited from mpq_class.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(rat(r)), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {Rational(-a.re), Rational(-a.im)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    GaussianRational conj() const { return {re, Rational(-im)}; }
    Rational norm() const { return Rational(re * re + im * im); }

    GaussianRational inverse() const {
        if (is_zero()) throw Error(ErrorKind::InputError, "division by zero in Q(i)");
        Rational n = norm();
        return {Rational(re / n), Rational(-im / n)};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }
    GaussianRational& operator/=(const GaussianRational& b) { *this = *this / b; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

using GQ = GaussianRational;

inline GQ gq(long re, long im = 0) { return {rat(re), rat(im)}; }
inline GQ gq(const Rational& re) { return {re, rat(0)}; }

inline std::string to_string(const GQ& z) {
    if (z.im == 0) return to_string(z.re);
    return to_string(z.re) + (z.im > 0 ? "+" : "") + to_string(z.im) + "i";
}

}  // namespace gzp
