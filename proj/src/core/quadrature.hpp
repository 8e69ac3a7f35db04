#pragma once

#include <vector>

#include "core/paths.hpp"
#include "core/poly.hpp"

namespace gzp {

// Gauss-Legendre nodes/weights on [-1, 1] at the working precision; cached.
struct GaussRule {
    std::vector<BigFloat> nodes, weights;
};
const GaussRule& gauss_rule(int order, long prec);

// Adaptive composite Gauss integration of f along a polyline, bisecting until
// the two-level difference meets the per-segment share of `tol`. Summation is
// strictly left to right; results are deterministic at fixed precision.
// Throws ToleranceNotMet when the refinement budget is exhausted.
BC integrate_polyline(const RationalFunction<BC>& f, const std::vector<BC>& polyline,
                      const BigFloat& tol, long prec);

}  // namespace gzp
