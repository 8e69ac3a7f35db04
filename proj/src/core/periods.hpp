#pragma once

#include <vector>

#include "core/paths.hpp"
#include "core/quadrature.hpp"
#include "core/strata.hpp"

namespace gzp {

template <class K>
DiffConfig<BC> to_complex_config(const DiffConfig<K>& cfg, long prec) {
    DiffConfig<BC> out;
    out.signature = cfg.signature;
    out.normalization = cfg.normalization;
    out.lambda = ScalarOps<K>::to_complex(cfg.lambda, prec);
    for (const K& x : cfg.zeros) out.zeros.push_back(ScalarOps<K>::to_complex(x, prec));
    for (const K& y : cfg.poles) out.poles.push_back(ScalarOps<K>::to_complex(y, prec));
    return out;
}

// Algebraic part of the relative periods: antiderivative of the polynomial
// part plus the order >= 2 pole terms, evaluated between x_0 and x_j. Exact
// over exact scalars; identically zero when every pole is simple.
template <class K>
std::vector<K> algebraic_period_part(const DiffConfig<K>& cfg) {
    validate_config(cfg);
    size_t m = cfg.zeros.size() > 0 ? cfg.zeros.size() - 1 : 0;
    if (cfg.zeros.size() < 2) return {};
    RationalFunction<K> w = differential_from_config(cfg);
    auto pf = partial_fractions(w, pole_factors(cfg));
    Polynomial<K> anti_q = pf.polynomial_part.antiderivative();

    auto eval_at = [&](const K& z) {
        K acc = anti_q.eval(z);
        for (const auto& t : pf.poles) {
            K diff = z - t.location;
            K inv = ScalarOps<K>::one() / diff;
            K ipow = inv;
            for (size_t j = 2; j <= t.coeffs.size(); ++j) {
                ipow = ipow * inv;  // (z - y)^{1-j} for j >= 2
                K denom = ScalarOps<K>::from_long(1 - static_cast<long>(j));
                acc = acc + t.coeffs[j - 1] * (diff * ipow) / denom;
            }
        }
        return acc;
    };

    std::vector<K> out;
    out.reserve(m);
    K base = eval_at(cfg.zeros[0]);
    for (size_t j = 1; j <= m; ++j) out.push_back(eval_at(cfg.zeros[j]) - base);
    return out;
}

struct PeriodVector {
    std::vector<BC> relative;         // integrals x_0 -> x_j, j = 1..m
    std::vector<BC> scaled_residues;  // 2 pi i R_k, k = 0..n
    std::vector<std::vector<Integer>> branch_data;  // winding offsets per (j, k)
};

template <class K>
std::vector<BC> complex_poles(const DiffConfig<K>& cfg, long prec) {
    std::vector<BC> ps;
    for (const K& y : cfg.poles) ps.push_back(ScalarOps<K>::to_complex(y, prec));
    return ps;
}

template <class K>
void check_path_endpoints(const DiffConfig<K>& cfg, size_t j, const IntegrationPath& path, long prec) {
    if (path.waypoints.size() < 2)
        throw Error(ErrorKind::InputError, "integration path needs at least two waypoints");
    if (j < 1 || j >= cfg.zeros.size())
        throw Error(ErrorKind::InputError, "relative period index out of range");
    BigFloat tol = BigFloat::of(path.detour.guard_radius, prec);
    BC x0 = ScalarOps<K>::to_complex(cfg.zeros[0], prec);
    BC xj = ScalarOps<K>::to_complex(cfg.zeros[j], prec);
    if (abs(path.waypoints.front() - x0) > tol || abs(path.waypoints.back() - xj) > tol)
        throw Error(ErrorKind::InputError, "path endpoints must be x_0 and x_j");
}

// F^alg_j plus the residue-weighted tracked logarithms along the path, with
// automatic detours; the branch is pinned by the resolved polyline.
template <class K>
BC closed_form_period(const DiffConfig<K>& cfg, size_t j, const IntegrationPath& path, long prec) {
    check_path_endpoints(cfg, j, path, prec);
    std::vector<BC> poles = complex_poles(cfg, prec);
    std::vector<BC> polyline = resolve_path(path, poles, prec);
    std::vector<K> falg = algebraic_period_part(cfg);
    ResidueVector<K> res = residues(cfg);
    BC acc = ScalarOps<K>::to_complex(falg[j - 1], prec);
    for (size_t k = 0; k < poles.size(); ++k)
        acc += ScalarOps<K>::to_complex(res.at_poles[k], prec) * tracked_log_polyline(poles[k], polyline);
    return acc;
}

// Numeric oracle: adaptive Gauss quadrature of omega along the waypoints as
// given. The path must clear the guard radius around every pole.
template <class K>
BC quadrature_period(const DiffConfig<K>& cfg, const IntegrationPath& path, const BigFloat& tol,
                     long prec) {
    validate_config(cfg);
    std::vector<BC> poles = complex_poles(cfg, prec);
    BigFloat guard = BigFloat::of(path.detour.guard_radius, prec);
    for (size_t i = 0; i + 1 < path.waypoints.size(); ++i)
        for (const BC& s : poles)
            if (segment_distance(s, path.waypoints[i], path.waypoints[i + 1]) < guard)
                throw Error(ErrorKind::PathThroughSingularity,
                            "segment passes within the guard radius of a pole");
    RationalFunction<BC> w = to_complex_ratfn(differential_from_config(cfg), prec);
    return integrate_polyline(w, path.waypoints, tol, prec);
}

// Both routes along the same resolved polyline; used by the oracle tests.
template <class K>
std::pair<BC, BC> period_both_routes(const DiffConfig<K>& cfg, size_t j, const IntegrationPath& path,
                                     const BigFloat& tol, long prec) {
    check_path_endpoints(cfg, j, path, prec);
    std::vector<BC> poles = complex_poles(cfg, prec);
    std::vector<BC> polyline = resolve_path(path, poles, prec);
    std::vector<K> falg = algebraic_period_part(cfg);
    ResidueVector<K> res = residues(cfg);
    BC closed = ScalarOps<K>::to_complex(falg[j - 1], prec);
    for (size_t k = 0; k < poles.size(); ++k)
        closed += ScalarOps<K>::to_complex(res.at_poles[k], prec) * tracked_log_polyline(poles[k], polyline);
    RationalFunction<BC> w = to_complex_ratfn(differential_from_config(cfg), prec);
    BC quad = integrate_polyline(w, polyline, tol, prec);
    return {closed, quad};
}

template <class K>
IntegrationPath default_path(const DiffConfig<K>& cfg, size_t j, long prec) {
    return straight_path(ScalarOps<K>::to_complex(cfg.zeros[0], prec),
                         ScalarOps<K>::to_complex(cfg.zeros[j], prec));
}

template <class K>
std::vector<IntegrationPath> default_paths(const DiffConfig<K>& cfg, long prec) {
    std::vector<IntegrationPath> ps;
    for (size_t j = 1; j < cfg.zeros.size(); ++j) ps.push_back(default_path(cfg, j, prec));
    return ps;
}

// Assembles (closed-form relative periods, 2 pi i residues) and the winding
// data of each tracked logarithm.
template <class K>
PeriodVector period_vector(const DiffConfig<K>& cfg, const std::vector<IntegrationPath>& paths,
                           long prec) {
    validate_config(cfg);
    size_t m = cfg.zeros.size() - 1;
    if (paths.size() != m)
        throw Error(ErrorKind::InputError, "expected one path per relative period");
    PeriodVector pv;
    std::vector<BC> poles = complex_poles(cfg, prec);
    std::vector<K> falg = algebraic_period_part(cfg);
    ResidueVector<K> res = residues(cfg);
    for (size_t j = 1; j <= m; ++j) {
        check_path_endpoints(cfg, j, paths[j - 1], prec);
        std::vector<BC> polyline = resolve_path(paths[j - 1], poles, prec);
        BC acc = ScalarOps<K>::to_complex(falg[j - 1], prec);
        std::vector<Integer> winds;
        for (size_t k = 0; k < poles.size(); ++k) {
            acc += ScalarOps<K>::to_complex(res.at_poles[k], prec) *
                   tracked_log_polyline(poles[k], polyline);
            winds.push_back(winding_offset(poles[k], polyline));
        }
        pv.relative.push_back(acc);
        pv.branch_data.push_back(std::move(winds));
    }
    BC two_pi_i = BC::two_pi_i(prec);
    for (size_t k = 0; k < cfg.poles.size(); ++k)
        pv.scaled_residues.push_back(two_pi_i * ScalarOps<K>::to_complex(res.at_poles[k], prec));
    return pv;
}

inline std::vector<BC> flatten(const PeriodVector& pv) {
    std::vector<BC> v = pv.relative;
    v.insert(v.end(), pv.scaled_residues.begin(), pv.scaled_residues.end());
    return v;
}

// Rank of the finite-difference Jacobian of the period map with respect to
// (lambda, x_1.., y_1..) at a canonical configuration.
size_t period_map_jacobian_rank(const DiffConfig<BC>& cfg, long prec, const BigFloat& rel_tol);

}  // namespace gzp
