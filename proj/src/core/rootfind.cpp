#include "core/rootfind.hpp"

#include <algorithm>
#include <cmath>

namespace gzp {

Rational dyadic_value(const BigFloat& x) {
    if (x.is_zero()) return Rational(0);
    Integer mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.raw());
    Rational q(mant);
    Integer two(1);
    if (e >= 0) {
        mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        q *= Rational(two);
    } else {
        mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
        q /= Rational(two);
    }
    q.canonicalize();
    return q;
}

std::optional<Rational> rational_reconstruct(const BigFloat& x, const Integer& den_bound) {
    long prec = x.prec();
    Rational target = dyadic_value(x);
    // continued-fraction convergents of target
    Integer p0(1), q0(0);  // h_{-1}, k_{-1}
    Integer p1(0), q1(1);  // seeded so first step produces floor(target)
    Rational rem = target;
    Rational best(0);
    bool have = false;
    for (int it = 0; it < 256; ++it) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), rem.get_num().get_mpz_t(), rem.get_den().get_mpz_t());
        Integer p2 = a * p0 + p1;
        Integer q2 = a * q0 + q1;
        if (q2 > den_bound && have) break;
        if (q2 > den_bound && !have) return std::nullopt;
        best = rat(p2, q2);
        have = true;
        Rational frac = rem - Rational(a);
        p1 = p0; q1 = q0; p0 = p2; q0 = q2;
        if (frac == 0) break;
        rem = Rational(1) / frac;
    }
    if (!have) return std::nullopt;
    BigFloat err = abs(x - BigFloat::of(best, prec));
    BigFloat tol = pow_si(BigFloat::of(2L, prec), -(prec / 2));
    if (err < tol) return best;
    return std::nullopt;
}

std::optional<GQ> gaussian_reconstruct(const BC& z, const Integer& den_bound) {
    auto re = rational_reconstruct(z.re, den_bound);
    if (!re) return std::nullopt;
    auto im = rational_reconstruct(z.im, den_bound);
    if (!im) return std::nullopt;
    return GQ{*re, *im};
}

std::vector<BC> aberth_roots(const Polynomial<BC>& p, long prec) {
    int n = p.degree();
    if (n <= 0) return {};
    Polynomial<BC> dp = p.derivative();

    // Cauchy-style radius from coefficient ratios.
    BigFloat lead = abs(p.lead());
    BigFloat radius = BigFloat::of(1L, prec);
    for (int i = 0; i < n; ++i) {
        BigFloat r = abs(p.coeff(static_cast<size_t>(i))) / lead;
        if (r > radius) radius = r;
    }
    radius += BigFloat::of(1L, prec);

    std::vector<BC> roots;
    roots.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double th = 2.0 * M_PI * k / n + 0.7;
        roots.push_back(BC(radius * BigFloat::of(std::cos(th), prec),
                           radius * BigFloat::of(std::sin(th), prec)));
    }

    BigFloat limit = pow_si(BigFloat::of(2L, prec), -(prec - 16));
    for (int it = 0; it < 2000; ++it) {
        BigFloat worst(prec);
        for (int k = 0; k < n; ++k) {
            BC pk = p.eval(roots[static_cast<size_t>(k)]);
            BC dk = dp.eval(roots[static_cast<size_t>(k)]);
            if (dk.is_zero()) {
                roots[static_cast<size_t>(k)] += BC::of(1e-3, 1e-3, prec);
                worst = BigFloat::of(1L, prec);
                continue;
            }
            BC newton = pk / dk;
            BC sum(prec);
            for (int j = 0; j < n; ++j)
                if (j != k) {
                    BC diff = roots[static_cast<size_t>(k)] - roots[static_cast<size_t>(j)];
                    sum += BC::of(1.0, 0.0, prec) / diff;
                }
            BC denom = BC::of(1.0, 0.0, prec) - newton * sum;
            BC step = denom.is_zero() ? newton : newton / denom;
            roots[static_cast<size_t>(k)] -= step;
            BigFloat s = abs(step);
            if (s > worst) worst = s;
        }
        if (worst < limit * (radius + BigFloat::of(1L, prec))) break;
    }
    std::sort(roots.begin(), roots.end(), [](const BC& a, const BC& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return roots;
}

RootSet find_roots(const Polynomial<GQ>& p, long prec) {
    RootSet out;
    if (p.degree() <= 0) return out;
    auto factors = squarefree_decomposition(p);
    Integer den_bound = Integer(1) << 48;
    for (size_t mi = 0; mi < factors.size(); ++mi) {
        const Polynomial<GQ>& f = factors[mi];
        if (f.degree() <= 0) continue;
        int mult = static_cast<int>(mi + 1);
        Polynomial<GQ> remaining = f;
        // peel off exact roots found by reconstruction
        std::vector<BC> approx = aberth_roots(to_complex_poly(remaining, prec), prec);
        for (const BC& r : approx) {
            if (remaining.degree() <= 0) break;
            auto cand = gaussian_reconstruct(r, den_bound);
            if (cand && ScalarOps<GQ>::is_zero(remaining.eval(*cand))) {
                out.exact.push_back({*cand, mult});
                remaining = remaining.deflate(*cand);
            } else {
                out.numeric.push_back({r, mult});
            }
        }
    }
    return out;
}

}  // namespace gzp
