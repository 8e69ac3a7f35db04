#pragma once

#include <utility>
#include <vector>

#include "core/linalg.hpp"
#include "core/poly.hpp"

namespace gzp {

template <class K>
struct PoleTerm {
    K location;
    std::vector<K> coeffs;  // coeffs[j-1] is the coefficient of (z-y)^-j
};

// f = polynomial_part + sum_i sum_j coeffs[i][j-1]/(z - y_i)^j, exactly.
// coeffs[i][0] is the residue at y_i.
template <class K>
struct PartialFractionForm {
    Polynomial<K> polynomial_part;
    std::vector<PoleTerm<K>> poles;
};

namespace detail {

template <class K>
bool poly_matches(const Polynomial<K>& a, const Polynomial<K>& b) {
    if constexpr (ScalarOps<K>::exact) {
        return a == b;
    } else {
        if (a.degree() != b.degree()) return false;
        long prec = BigFloat::kDefaultPrec;
        BigFloat scale(prec), diff(prec);
        for (int i = 0; i <= a.degree(); ++i) {
            scale += abs(a.coeff(static_cast<size_t>(i)));
            diff += abs(a.coeff(static_cast<size_t>(i)) - b.coeff(static_cast<size_t>(i)));
        }
        return diff <= scale * pow_si(BigFloat::of(2L, prec), -(a.coeff(0).prec() / 2));
    }
}

}  // namespace detail

// Decomposition against a supplied exact factorization of the denominator.
// The poles must be pairwise distinct and their orders must multiply out to
// the denominator (up to the leading coefficient), else BadFactorization.
template <class K>
PartialFractionForm<K> partial_fractions(const RationalFunction<K>& f,
                                         const std::vector<std::pair<K, int>>& poles) {
    for (size_t i = 0; i < poles.size(); ++i) {
        if (poles[i].second < 1)
            throw Error(ErrorKind::BadFactorization, "pole order must be >= 1");
        for (size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i].first == poles[j].first)
                throw Error(ErrorKind::BadFactorization, "pole locations must be distinct");
    }

    Polynomial<K> prod = Polynomial<K>::constant(ScalarOps<K>::one());
    for (const auto& [y, e] : poles) prod = prod * Polynomial<K>::linear(y).pow(e);

    if (prod.degree() != f.den().degree())
        throw Error(ErrorKind::BadFactorization, "pole orders do not sum to the denominator degree");
    K c = f.den().lead();  // prod is monic
    if (!detail::poly_matches(c * prod, f.den()))
        throw Error(ErrorKind::BadFactorization, "poles do not factor the denominator");

    auto [q, r] = f.num().divmod(f.den());
    PartialFractionForm<K> out;
    out.polynomial_part = q;
    if (poles.empty()) return out;

    // r/den = r/(c*prod) = sum a_ij * prod_ij / prod with prod_ij = prod/(z-y_i)^j.
    size_t unknowns = static_cast<size_t>(prod.degree());
    Mat<K> m = mat_zero<K>(unknowns, unknowns);
    std::vector<std::vector<Polynomial<K>>> cofactors(poles.size());
    {
        size_t col = 0;
        for (size_t i = 0; i < poles.size(); ++i) {
            Polynomial<K> p = prod;
            cofactors[i].reserve(static_cast<size_t>(poles[i].second));
            for (int j = 1; j <= poles[i].second; ++j) {
                p = p.deflate(poles[i].first);
                cofactors[i].push_back(p);
                for (size_t row = 0; row < unknowns; ++row) m[row][col] = p.coeff(row);
                ++col;
            }
        }
    }
    std::vector<K> rhs(unknowns, ScalarOps<K>::zero());
    K cinv = ScalarOps<K>::one() / c;
    for (size_t row = 0; row < unknowns; ++row) rhs[row] = r.coeff(row) * cinv;

    auto sol = exact_solve(std::move(m), std::move(rhs));
    if (!sol) throw Error(ErrorKind::BadFactorization, "singular system; factorization inconsistent");

    size_t col = 0;
    for (const auto& [y, e] : poles) {
        PoleTerm<K> t;
        t.location = y;
        for (int j = 1; j <= e; ++j) t.coeffs.push_back((*sol)[col++]);
        out.poles.push_back(std::move(t));
    }
    return out;
}

// Unique rational function equal to the decomposition; exact round-trip of
// partial_fractions over exact fields.
template <class K>
RationalFunction<K> recompose(const PartialFractionForm<K>& pf) {
    Polynomial<K> prod = Polynomial<K>::constant(ScalarOps<K>::one());
    for (const auto& t : pf.poles)
        prod = prod * Polynomial<K>::linear(t.location).pow(static_cast<int>(t.coeffs.size()));
    Polynomial<K> num = pf.polynomial_part * prod;
    for (const auto& t : pf.poles) {
        Polynomial<K> p = prod;
        for (size_t j = 0; j < t.coeffs.size(); ++j) {
            p = p.deflate(t.location);
            num = num + t.coeffs[j] * p;
        }
    }
    return RationalFunction<K>(num, prod);
}

// Independent route used as a cross-check: Taylor expansion of the pole-free
// part at each pole. a_{i,e-j} = g^(j)(y_i)/j! where g = (z-y_i)^e * f.
template <class K>
std::vector<K> pole_coefficients_by_taylor(const RationalFunction<K>& f, const K& y, int order) {
    Polynomial<K> den_reduced = f.den();
    for (int j = 0; j < order; ++j) den_reduced = den_reduced.deflate(y);
    RationalFunction<K> g(f.num(), den_reduced);
    std::vector<K> coeffs(static_cast<size_t>(order), ScalarOps<K>::zero());
    K fact = ScalarOps<K>::one();
    for (int j = 0; j < order; ++j) {
        if (j > 0) fact = fact * ScalarOps<K>::from_long(j);
        coeffs[static_cast<size_t>(order - 1 - j)] = g.eval(y) / fact;
        g = g.derivative();
    }
    return coeffs;
}

}  // namespace gzp
