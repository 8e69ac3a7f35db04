#pragma once

#include <utility>
#include <vector>

#include "core/partial_fractions.hpp"
#include "core/poly.hpp"

namespace gzp {

// Integer partition of -2 recording zero/pole orders. Layout of `orders`:
// zero-block entries (>= 0), then finite-pole entries (< 0), then the order
// at infinity as the final entry (any sign; infinity is always marked last).
struct StratumSignature {
    std::vector<int> orders;
    int m = -1;  // zero count - 1
    int n = -1;  // finite-pole count - 1
    bool canonical_ok = false;

    int zero_order(size_t i) const { return orders[i]; }
    int pole_order(size_t j) const { return -orders[static_cast<size_t>(m + 1) + j]; }  // > 0
    int order_at_infinity() const { return orders.back(); }
    size_t zero_count() const { return static_cast<size_t>(m + 1); }
    size_t finite_pole_count() const { return static_cast<size_t>(n + 1); }
    size_t pole_count_total() const {
        return finite_pole_count() + (order_at_infinity() < 0 ? 1 : 0);
    }
    bool all_poles_simple() const {
        for (size_t j = 0; j < finite_pole_count(); ++j)
            if (pole_order(j) != 1) return false;
        return order_at_infinity() == -1;
    }
    friend bool operator==(const StratumSignature& a, const StratumSignature& b) {
        return a.orders == b.orders;
    }
};

// Accepts iff the orders sum to -2 and the layout is well-formed. Canonical-
// mode operations additionally require >= 2 poles and >= 1 zero of positive
// order, with infinity a pole.
StratumSignature validate_signature(const std::vector<int>& orders);

enum class Normalization { Canonical, Free };

template <class K>
struct DiffConfig {
    StratumSignature signature;
    K lambda;
    std::vector<K> zeros;   // x_0..x_m
    std::vector<K> poles;   // y_0..y_n (finite poles; infinity is implicit)
    Normalization normalization = Normalization::Free;
};

template <class K>
void validate_config(const DiffConfig<K>& cfg) {
    const auto& sig = cfg.signature;
    if (cfg.zeros.size() != sig.zero_count() || cfg.poles.size() != sig.finite_pole_count())
        throw Error(ErrorKind::DegenerateConfig, "marked point counts do not match the signature");
    if (ScalarOps<K>::is_zero(cfg.lambda))
        throw Error(ErrorKind::DegenerateConfig, "lambda must be nonzero");
    std::vector<const K*> pts;
    for (const K& x : cfg.zeros) pts.push_back(&x);
    for (const K& y : cfg.poles) pts.push_back(&y);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (*pts[i] == *pts[j])
                throw Error(ErrorKind::DegenerateConfig, "marked points must be pairwise distinct");
    if (cfg.normalization == Normalization::Canonical) {
        if (!sig.canonical_ok)
            throw Error(ErrorKind::NotCanonical, "signature does not admit the canonical normalization");
        if (!ScalarOps<K>::is_zero(cfg.zeros[0]))
            throw Error(ErrorKind::NotCanonical, "canonical normalization requires x_0 = 0");
        K y0 = cfg.poles.empty() ? ScalarOps<K>::zero() : cfg.poles[0];
        if (!ScalarOps<K>::is_zero(y0 - ScalarOps<K>::one()))
            throw Error(ErrorKind::NotCanonical, "canonical normalization requires y_0 = 1");
    }
}

// omega/dz = lambda * prod (z-x_i)^{e_i} / prod (z-y_j)^{f_j}.
template <class K>
RationalFunction<K> differential_from_config(const DiffConfig<K>& cfg) {
    validate_config(cfg);
    Polynomial<K> num = Polynomial<K>::constant(cfg.lambda);
    for (size_t i = 0; i < cfg.zeros.size(); ++i)
        num = num * Polynomial<K>::linear(cfg.zeros[i]).pow(cfg.signature.zero_order(i));
    Polynomial<K> den = Polynomial<K>::constant(ScalarOps<K>::one());
    for (size_t j = 0; j < cfg.poles.size(); ++j)
        den = den * Polynomial<K>::linear(cfg.poles[j]).pow(cfg.signature.pole_order(j));
    return RationalFunction<K>(num, den);
}

template <class K>
std::vector<std::pair<K, int>> pole_factors(const DiffConfig<K>& cfg) {
    std::vector<std::pair<K, int>> f;
    for (size_t j = 0; j < cfg.poles.size(); ++j)
        f.push_back({cfg.poles[j], cfg.signature.pole_order(j)});
    return f;
}

template <class K>
struct ResidueVector {
    std::vector<K> at_poles;  // R_0..R_n at the marked finite poles
    K at_infinity;            // -(R_0 + ... + R_n)
};

// Residues via the partial-fraction coefficients a_{j1}; exact on exact input.
template <class K>
ResidueVector<K> residues(const DiffConfig<K>& cfg) {
    RationalFunction<K> w = differential_from_config(cfg);
    auto pf = partial_fractions(w, pole_factors(cfg));
    ResidueVector<K> r;
    K sum = ScalarOps<K>::zero();
    for (const auto& t : pf.poles) {
        r.at_poles.push_back(t.coeffs[0]);
        sum = sum + t.coeffs[0];
    }
    r.at_infinity = -sum;
    return r;
}

// Moebius renormalization u = (z - zeros[zero_index])/(poles[pole_index] -
// zeros[zero_index]). The chosen points move to the front of their lists and
// become 0 and 1; infinity stays a marked pole. Periods and residues are
// invariant under this change of coordinate.
template <class K>
DiffConfig<K> canonicalize(const DiffConfig<K>& cfg, size_t zero_index = 0, size_t pole_index = 0) {
    validate_config(cfg);
    const auto& sig = cfg.signature;
    if (!sig.canonical_ok)
        throw Error(ErrorKind::NotCanonical, "signature does not admit the canonical normalization");
    if (zero_index >= cfg.zeros.size() || pole_index >= cfg.poles.size())
        throw Error(ErrorKind::InputError, "normalization indices out of range");
    if (sig.zero_order(zero_index) <= 0)
        throw Error(ErrorKind::NotCanonical, "x_0 must be a genuine zero");
    K x0 = cfg.zeros[zero_index];
    K s = cfg.poles[pole_index] - x0;

    DiffConfig<K> out;
    out.normalization = Normalization::Canonical;
    out.lambda = cfg.lambda;
    int scale_exp = -1 - sig.order_at_infinity();
    K sp = ScalarOps<K>::one();
    bool invert = scale_exp < 0;
    for (int t = 0; t < (invert ? -scale_exp : scale_exp); ++t) sp = sp * s;
    out.lambda = invert ? cfg.lambda / sp : cfg.lambda * sp;

    std::vector<int> zorders, porders;
    auto push_zero = [&](size_t i) {
        out.zeros.push_back((cfg.zeros[i] - x0) / s);
        zorders.push_back(sig.zero_order(i));
    };
    auto push_pole = [&](size_t j) {
        out.poles.push_back((cfg.poles[j] - x0) / s);
        porders.push_back(sig.pole_order(j));
    };
    push_zero(zero_index);
    for (size_t i = 0; i < cfg.zeros.size(); ++i)
        if (i != zero_index) push_zero(i);
    push_pole(pole_index);
    for (size_t j = 0; j < cfg.poles.size(); ++j)
        if (j != pole_index) push_pole(j);

    std::vector<int> orders;
    for (int e : zorders) orders.push_back(e);
    for (int f : porders) orders.push_back(-f);
    orders.push_back(sig.order_at_infinity());
    out.signature = validate_signature(orders);
    validate_config(out);
    return out;
}

// Zero/pole orders recovered from an explicit differential; used to cross-
// check configurations against their signature.
template <class K>
std::vector<int> recovered_orders(const DiffConfig<K>& cfg) {
    RationalFunction<K> w = differential_from_config(cfg);
    std::vector<int> orders;
    for (const K& x : cfg.zeros) orders.push_back(w.order_at(x));
    for (const K& y : cfg.poles) orders.push_back(w.order_at(y));
    orders.push_back(w.order_at_infinity() - 2);
    return orders;
}

}  // namespace gzp
