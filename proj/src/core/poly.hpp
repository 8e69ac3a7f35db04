#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "support/scalar.hpp"

namespace gzp {

// Dense univariate polynomial, coefficients ascending. degree() of the zero
// polynomial is the sentinel -1.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const K& k) { return Polynomial(std::vector<K>{k}); }
    static Polynomial x() {
        return Polynomial(std::vector<K>{ScalarOps<K>::zero(), ScalarOps<K>::one()});
    }
    static Polynomial monomial(const K& k, int deg) {
        std::vector<K> v(static_cast<size_t>(deg) + 1, ScalarOps<K>::zero());
        v.back() = k;
        return Polynomial(std::move(v));
    }
    static Polynomial from_roots(const std::vector<K>& roots) {
        Polynomial p = constant(ScalarOps<K>::one());
        for (const K& r : roots) p = p * linear(r);
        return p;
    }
    // z - r
    static Polynomial linear(const K& r) {
        return Polynomial(std::vector<K>{-r, ScalarOps<K>::one()});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const K& operator[](size_t i) const { return c_[i]; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : ScalarOps<K>::zero(); }
    const K& lead() const { return c_.back(); }

    K eval(const K& z) const {
        K acc = ScalarOps<K>::zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<K> d(c_.size() - 1, ScalarOps<K>::zero());
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * ScalarOps<K>::from_long(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    // Antiderivative with zero constant term; requires a field of characteristic 0.
    Polynomial antiderivative() const {
        std::vector<K> a(c_.size() + 1, ScalarOps<K>::zero());
        for (size_t i = 0; i < c_.size(); ++i)
            a[i + 1] = c_[i] / ScalarOps<K>::from_long(static_cast<long>(i) + 1);
        return Polynomial(std::move(a));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), ScalarOps<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), ScalarOps<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<K> r(a.c_);
        for (K& k : r) k = -k;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, ScalarOps<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const K& k, const Polynomial& a) {
        std::vector<K> r(a.c_);
        for (K& x : r) x = x * k;
        return Polynomial(std::move(r));
    }

    Polynomial pow(int e) const {
        Polynomial acc = constant(ScalarOps<K>::one());
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw Error(ErrorKind::InputError, "polynomial division by zero");
        Polynomial r = *this;
        if (r.degree() < d.degree()) return {Polynomial(), r};
        std::vector<K> q(static_cast<size_t>(r.degree() - d.degree()) + 1, ScalarOps<K>::zero());
        K inv_lead = ScalarOps<K>::one() / d.lead();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            K f = r.lead() * inv_lead;
            q[static_cast<size_t>(shift)] = f;
            std::vector<K> rc = r.c_;
            for (size_t i = 0; i < d.c_.size(); ++i)
                rc[i + static_cast<size_t>(shift)] = rc[i + static_cast<size_t>(shift)] - f * d.c_[i];
            rc.resize(static_cast<size_t>(r.degree()));  // leading term cancels exactly
            r = Polynomial(std::move(rc));
        }
        return {Polynomial(std::move(q)), r};
    }

    // Deflation by (z - r); returns quotient, requires r to be an exact root.
    Polynomial deflate(const K& root) const {
        std::vector<K> q(c_.size() - 1, ScalarOps<K>::zero());
        K carry = ScalarOps<K>::zero();
        for (size_t i = c_.size(); i-- > 1;) {
            carry = c_[i] + carry * root;
            q[i - 1] = carry;
        }
        return Polynomial(std::move(q));
    }

    // Order of vanishing at a point (exact scalars).
    int order_at(const K& z) const {
        if (is_zero()) throw Error(ErrorKind::InputError, "order of zero polynomial");
        Polynomial p = *this;
        int ord = 0;
        while (ScalarOps<K>::is_zero(p.eval(z))) {
            p = p.deflate(z);
            ++ord;
        }
        return ord;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        K inv = ScalarOps<K>::one() / lead();
        return inv * *this;
    }

private:
    void trim() {
        while (!c_.empty() && ScalarOps<K>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

// Monic gcd by the Euclidean algorithm; exact fields only.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    static_assert(ScalarOps<K>::exact, "poly_gcd requires an exact field");
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// Yun squarefree decomposition: f = lead * prod_k out[k]^k with out[k] monic
// squarefree and pairwise coprime (index 1-based; entries may be constant 1).
template <class K>
std::vector<Polynomial<K>> squarefree_decomposition(const Polynomial<K>& f) {
    static_assert(ScalarOps<K>::exact, "squarefree decomposition requires an exact field");
    std::vector<Polynomial<K>> out;
    if (f.degree() <= 0) return out;
    Polynomial<K> fp = f.derivative();
    Polynomial<K> u = poly_gcd(f, fp);
    Polynomial<K> v = f.divmod(u).first;
    Polynomial<K> w = fp.divmod(u).first;
    while (v.degree() > 0) {
        Polynomial<K> s = w - v.derivative();
        Polynomial<K> a = poly_gcd(v, s);
        out.push_back(a.monic());
        v = v.divmod(a).first;
        w = s.divmod(a).first;
    }
    return out;
}

// Rational function; over exact fields it is kept reduced with monic
// denominator, so equality is plain coefficient equality.
template <class K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial<K>::constant(ScalarOps<K>::one())) {}
    RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(ErrorKind::InputError, "rational function with zero denominator");
        reduce();
    }
    static RationalFunction constant(const K& k) {
        return RationalFunction(Polynomial<K>::constant(k), Polynomial<K>::constant(ScalarOps<K>::one()));
    }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    K eval(const K& z) const {
        K d = den_.eval(z);
        if (ScalarOps<K>::is_zero(d))
            throw Error(ErrorKind::PoleEvaluation, "evaluation at a pole of the denominator");
        return num_.eval(z) / d;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw Error(ErrorKind::InputError, "division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if constexpr (ScalarOps<K>::exact) {
            return a.num_ == b.num_ && a.den_ == b.den_;
        } else {
            return a.num_ * b.den_ == b.num_ * a.den_;
        }
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Order of vanishing at z (negative at a pole); exact fields.
    int order_at(const K& z) const {
        if (num_.is_zero()) throw Error(ErrorKind::InputError, "order of the zero function");
        return num_.order_at(z) - den_.order_at(z);
    }
    // Order at infinity: deg den - deg num.
    int order_at_infinity() const {
        if (num_.is_zero()) throw Error(ErrorKind::InputError, "order of the zero function");
        return den_.degree() - num_.degree();
    }

private:
    void reduce() {
        if constexpr (ScalarOps<K>::exact) {
            if (num_.is_zero()) {
                den_ = Polynomial<K>::constant(ScalarOps<K>::one());
                return;
            }
            Polynomial<K> g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.divmod(g).first;
                den_ = den_.divmod(g).first;
            }
            K lead_inv = ScalarOps<K>::one() / den_.lead();
            num_ = lead_inv * num_;
            den_ = lead_inv * den_;
        }
    }
    Polynomial<K> num_, den_;
};

// p(f) for a rational function f = fn/fd, returned as a rational function.
template <class K>
RationalFunction<K> compose(const Polynomial<K>& p, const RationalFunction<K>& f) {
    if (p.is_zero()) return RationalFunction<K>();
    int d = p.degree();
    Polynomial<K> num;  // sum c_i * fn^i * fd^(d-i)
    Polynomial<K> fn_pow = Polynomial<K>::constant(ScalarOps<K>::one());
    std::vector<Polynomial<K>> fd_pows(static_cast<size_t>(d) + 1);
    fd_pows[0] = Polynomial<K>::constant(ScalarOps<K>::one());
    for (int i = 1; i <= d; ++i) fd_pows[static_cast<size_t>(i)] = fd_pows[static_cast<size_t>(i - 1)] * f.den();
    for (int i = 0; i <= d; ++i) {
        num = num + p.coeff(static_cast<size_t>(i)) * (fn_pow * fd_pows[static_cast<size_t>(d - i)]);
        if (i < d) fn_pow = fn_pow * f.num();
    }
    return RationalFunction<K>(num, fd_pows[static_cast<size_t>(d)]);
}

// g(f) for rational g, rational f.
template <class K>
RationalFunction<K> compose(const RationalFunction<K>& g, const RationalFunction<K>& f) {
    RationalFunction<K> n = compose(g.num(), f);
    RationalFunction<K> d = compose(g.den(), f);
    return n / d;
}

template <class K>
Polynomial<BC> to_complex_poly(const Polynomial<K>& p, long prec) {
    std::vector<BC> c;
    c.reserve(p.coeffs().size());
    for (const K& k : p.coeffs()) c.push_back(ScalarOps<K>::to_complex(k, prec));
    return Polynomial<BC>(std::move(c));
}

template <class K>
RationalFunction<BC> to_complex_ratfn(const RationalFunction<K>& f, long prec) {
    return RationalFunction<BC>(to_complex_poly(f.num(), prec), to_complex_poly(f.den(), prec));
}

}  // namespace gzp
