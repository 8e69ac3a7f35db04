#pragma once

#include <optional>
#include <vector>

#include "core/poly.hpp"

namespace gzp {

// Exact dyadic value of an mpfr float as a rational.
Rational dyadic_value(const BigFloat& x);

// Best rational approximation with denominator <= bound whose distance to x
// is below 2^-(prec/2); nullopt when no convergent qualifies.
std::optional<Rational> rational_reconstruct(const BigFloat& x, const Integer& den_bound);

std::optional<GQ> gaussian_reconstruct(const BC& z, const Integer& den_bound);

// Aberth-Ehrlich simultaneous iteration for a squarefree polynomial.
std::vector<BC> aberth_roots(const Polynomial<BC>& p, long prec);

struct RootSet {
    std::vector<std::pair<GQ, int>> exact;   // root, multiplicity
    std::vector<std::pair<BC, int>> numeric;  // roots not recognized in Q(i)
};

// Roots with multiplicity via exact squarefree decomposition; each root of a
// squarefree factor is located numerically and promoted to Q(i) when an exact
// candidate verifies by substitution.
RootSet find_roots(const Polynomial<GQ>& p, long prec);

}  // namespace gzp
