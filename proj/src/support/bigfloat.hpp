#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "support/rational.hpp"

namespace gzp {

// Arbitrary-precision real number over mpfr_t. Binary operations round the
// result to min(precision of operands); precision never drops below 64 bits.
class BigFloat {
public:
    static constexpr long kMinPrec = 64;
    static constexpr long kDefaultPrec = 256;

    explicit BigFloat(long prec = kDefaultPrec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kMinPrec); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(double x, long prec = kDefaultPrec) {
        BigFloat r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r;
    }
    static BigFloat of(long x, long prec = kDefaultPrec) {
        BigFloat r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r;
    }
    static BigFloat of(const Rational& q, long prec = kDefaultPrec) {
        BigFloat r(prec); mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN); return r;
    }
    static BigFloat of(const Integer& z, long prec = kDefaultPrec) {
        BigFloat r(prec); mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN); return r;
    }
    static BigFloat parse(const std::string& s, long prec = kDefaultPrec) {
        BigFloat r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw Error(ErrorKind::InputError, "bad numeric literal: " + s);
        return r;
    }
    static BigFloat pi(long prec = kDefaultPrec) {
        BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r;
    }
    // Smallest representable relative step, 2^(1-prec).
    static BigFloat eps(long prec) {
        BigFloat r(prec); mpfr_set_ui_2exp(r.v_, 1, 1 - clamp(prec), MPFR_RNDN); return r;
    }

    long prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r;
    }
    BigFloat& operator+=(const BigFloat& b) { *this = *this + b; return *this; }
    BigFloat& operator-=(const BigFloat& b) { *this = *this - b; return *this; }
    BigFloat& operator*=(const BigFloat& b) { *this = *this * b; return *this; }
    BigFloat& operator/=(const BigFloat& b) { *this = *this / b; return *this; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(join(y, x)); mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN); return r;
    }
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y) {
        BigFloat r(join(y, x)); mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN); return r;
    }
    friend BigFloat pow_si(const BigFloat& a, long e) {
        BigFloat r(a.prec()); mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN); return r;
    }
    // Round to nearest integer (ties away from zero).
    friend Integer round_to_integer(const BigFloat& a) {
        BigFloat t(a.prec());
        mpfr_round(t.v_, a.v_);
        Integer z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    BigFloat with_prec(long prec) const {
        BigFloat r(prec); mpfr_set(r.v_, v_, MPFR_RNDN); return r;
    }

    // Decimal rendering with enough digits to round-trip at this precision.
    std::string str(size_t digits = 0) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static long clamp(long p) { return p < kMinPrec ? kMinPrec : p; }
    static long join(const BigFloat& a, const BigFloat& b) {
        return a.prec() < b.prec() ? a.prec() : b.prec();
    }
    mpfr_t v_;
};

}  // namespace gzp
