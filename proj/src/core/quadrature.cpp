#include "core/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "support/errors.hpp"

namespace gzp {

namespace {

// Legendre P_n and derivative at x by the three-term recurrence.
std::pair<BigFloat, BigFloat> legendre_pd(int n, const BigFloat& x, long prec) {
    BigFloat pm1 = BigFloat::of(1L, prec), p = x.with_prec(prec);
    if (n == 0) return {pm1, BigFloat(prec)};
    for (int k = 2; k <= n; ++k) {
        BigFloat pk = (BigFloat::of(2 * k - 1, prec) * x * p - BigFloat::of(k - 1, prec) * pm1) /
                      BigFloat::of(k, prec);
        pm1 = p;
        p = pk;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    BigFloat d = BigFloat::of(n, prec) * (x * p - pm1) / (x * x - BigFloat::of(1L, prec));
    return {p, d};
}

GaussRule build_rule(int order, long prec) {
    long wp = prec + 32;
    GaussRule rule;
    rule.nodes.reserve(static_cast<size_t>(order));
    rule.weights.reserve(static_cast<size_t>(order));
    BigFloat one = BigFloat::of(1L, wp);
    BigFloat limit = BigFloat::eps(wp) * BigFloat::of(8L, wp);
    for (int k = 1; k <= order; ++k) {
        double guess = std::cos(M_PI * (k - 0.25) / (order + 0.5));
        BigFloat x = BigFloat::of(guess, wp);
        for (int it = 0; it < 200; ++it) {
            auto [p, d] = legendre_pd(order, x, wp);
            BigFloat dx = p / d;
            x -= dx;
            if (abs(dx) < limit) break;
        }
        auto [p, d] = legendre_pd(order, x, wp);
        (void)p;
        BigFloat w = BigFloat::of(2L, wp) / ((one - x * x) * d * d);
        rule.nodes.push_back(x.with_prec(prec));
        rule.weights.push_back(w.with_prec(prec));
    }
    return rule;
}

std::map<std::pair<int, long>, GaussRule> g_rules;
std::mutex g_rules_mutex;

BC gauss_segment(const RationalFunction<BC>& f, const BC& a, const BC& b, const GaussRule& rule,
                 long prec) {
    BC half = BC(BigFloat::of(0.5, prec), BigFloat(prec));
    BC mid = (a + b) * half;
    BC rad = (b - a) * half;
    BC acc(prec);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        BC z = mid + BC(rule.nodes[i].with_prec(prec), BigFloat(prec)) * rad;
        acc += BC(rule.weights[i].with_prec(prec), BigFloat(prec)) * f.eval(z);
    }
    return acc * rad;
}

BC adaptive(const RationalFunction<BC>& f, const BC& a, const BC& b, const GaussRule& rule,
            const BigFloat& tol, long prec, int depth) {
    BC whole = gauss_segment(f, a, b, rule, prec);
    BC mid = (a + b) * BC(BigFloat::of(0.5, prec), BigFloat(prec));
    BC left = gauss_segment(f, a, mid, rule, prec);
    BC right = gauss_segment(f, mid, b, rule, prec);
    BC refined = left + right;
    if (abs(refined - whole) <= tol) return refined;
    if (depth >= 48)
        throw Error(ErrorKind::ToleranceNotMet, "refinement budget exhausted");
    BigFloat half_tol = tol / BigFloat::of(2L, prec);
    return adaptive(f, a, mid, rule, half_tol, prec, depth + 1) +
           adaptive(f, mid, b, rule, half_tol, prec, depth + 1);
}

}  // namespace

const GaussRule& gauss_rule(int order, long prec) {
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto key = std::make_pair(order, prec);
    auto it = g_rules.find(key);
    if (it == g_rules.end()) it = g_rules.emplace(key, build_rule(order, prec)).first;
    return it->second;
}

BC integrate_polyline(const RationalFunction<BC>& f, const std::vector<BC>& polyline,
                      const BigFloat& tol, long prec) {
    BC total(prec);
    if (polyline.size() < 2) return total;
    const GaussRule& rule = gauss_rule(20, prec);

    BigFloat whole_len(prec);
    for (size_t i = 0; i + 1 < polyline.size(); ++i) whole_len += abs(polyline[i + 1] - polyline[i]);
    for (size_t i = 0; i + 1 < polyline.size(); ++i) {
        BigFloat share = tol * abs(polyline[i + 1] - polyline[i]) / whole_len;
        total += adaptive(f, polyline[i], polyline[i + 1], rule, share, prec, 0);
    }
    return total;
}

}  // namespace gzp
