#include "core/linalg.hpp"

#include <algorithm>

namespace gzp {

std::vector<BigFloat> singular_values(const Mat<BC>& a, long prec) {
    size_t m = a.size();
    size_t n = m == 0 ? 0 : a[0].size();
    if (m == 0 || n == 0) return {};
    // Gram matrix h = a^H a at working precision.
    auto lift = [&](const BC& z) { return BC(z.re.with_prec(prec), z.im.with_prec(prec)); };
    Mat<BC> h = mat_zero<BC>(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BC s(prec);
            for (size_t k = 0; k < m; ++k) s += lift(a[k][i]).conj() * lift(a[k][j]);
            h[i][j] = s;
        }

    BigFloat two = BigFloat::of(2L, prec);
    BigFloat thresh = BigFloat::eps(prec) * BigFloat::of(16L, prec);
    // Cyclic Jacobi sweeps for the Hermitian eigenproblem.
    for (int sweep = 0; sweep < 80; ++sweep) {
        BigFloat off(prec);
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += abs(h[p][q]);
        BigFloat scale(prec);
        for (size_t p = 0; p < n; ++p) scale += abs(h[p][p]);
        if (off <= thresh * (scale + BigFloat::of(1L, prec))) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                BigFloat apq = abs(h[p][q]);
                if (apq.is_zero()) continue;
                // Unitary 2x2: diagonalize [[app, hpq],[conj(hpq), aqq]].
                BC phase = h[p][q] / BC(apq, BigFloat(prec));
                BigFloat app = h[p][p].re, aqq = h[q][q].re;
                BigFloat tau = (aqq - app) / (two * apq);
                BigFloat t = (tau >= BigFloat(prec))
                                 ? BigFloat::of(1L, prec) / (tau + hypot(BigFloat::of(1L, prec), tau))
                                 : BigFloat::of(-1L, prec) / (-tau + hypot(BigFloat::of(1L, prec), tau));
                BigFloat c = BigFloat::of(1L, prec) / hypot(BigFloat::of(1L, prec), t);
                BigFloat s = t * c;
                BC cs(c, BigFloat(prec));
                BC sn = phase * BC(s, BigFloat(prec));
                for (size_t k = 0; k < n; ++k) {
                    BC hkp = h[k][p], hkq = h[k][q];
                    h[k][p] = hkp * cs - hkq * sn.conj();
                    h[k][q] = hkp * sn + hkq * cs;
                }
                for (size_t k = 0; k < n; ++k) {
                    BC hpk = h[p][k], hqk = h[q][k];
                    h[p][k] = hpk * cs - hqk * sn;
                    h[q][k] = hpk * sn.conj() + hqk * cs;
                }
            }
        }
    }

    std::vector<BigFloat> sv;
    sv.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        BigFloat ev = h[i][i].re;
        if (ev.sign() < 0) ev = BigFloat(prec);
        sv.push_back(sqrt(ev));
    }
    std::sort(sv.begin(), sv.end(), [](const BigFloat& x, const BigFloat& y) { return y < x; });
    return sv;
}

size_t numeric_rank(const Mat<BC>& a, long prec, const BigFloat& rel_tol) {
    std::vector<BigFloat> sv = singular_values(a, prec);
    if (sv.empty() || sv[0].is_zero()) return 0;
    BigFloat cut = sv[0] * rel_tol;
    size_t r = 0;
    while (r < sv.size() && sv[r] > cut) ++r;
    return r;
}

namespace {

Rational dot_qq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot_zq(const std::vector<Integer>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

}  // namespace

std::vector<std::vector<Integer>> lll_reduce(std::vector<std::vector<Integer>> b) {
    size_t n = b.size();
    if (n <= 1) return b;
    size_t dim = b[0].size();

    std::vector<std::vector<Rational>> gs(n, std::vector<Rational>(dim));
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> norm2(n);

    auto recompute = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t d = 0; d < dim; ++d) gs[i][d] = Rational(b[i][d]);
            for (size_t j = 0; j < i; ++j) {
                mu[i][j] = norm2[j] == 0 ? Rational(0) : Rational(dot_zq(b[i], gs[j]) / norm2[j]);
                for (size_t d = 0; d < dim; ++d) gs[i][d] -= mu[i][j] * gs[j][d];
            }
            norm2[i] = dot_qq(gs[i], gs[i]);
        }
    };
    recompute();

    const Rational delta(3, 4);
    size_t k = 1;
    long guard = 0;
    while (k < n) {
        if (++guard > 100000) break;  // defensive cap; lattices here are small
        for (size_t j = k; j-- > 0;) {
            Rational m = mu[k][j];
            // nearest integer
            Integer r;
            {
                Rational half(1, 2);
                Rational shifted = m + half;
                Integer num = shifted.get_num(), den = shifted.get_den();
                mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            }
            if (r != 0) {
                for (size_t d = 0; d < dim; ++d) b[k][d] -= r * b[j][d];
                recompute();
            }
        }
        Rational lhs = norm2[k];
        Rational rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            recompute();
            k = k > 1 ? k - 1 : 1;
        }
    }
    return b;
}

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<Integer>& r) {
                                  return std::all_of(r.begin(), r.end(), [](const Integer& z) { return z == 0; });
                              }),
               rows.end());
    if (rows.empty()) return rows;
    size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        // Euclidean elimination in column c below row r.
        while (true) {
            size_t p = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (p == rows.size() || abs(rows[i][c]) < abs(rows[p][c])) p = i;
            }
            if (p == rows.size()) break;
            std::swap(rows[r], rows[p]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q = rows[i][c] / rows[r][c];  // truncated division is fine here
                if (q != 0)
                    for (size_t d = 0; d < cols; ++d) rows[i][d] -= q * rows[r][d];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (size_t d = 0; d < cols; ++d) rows[r][d] = -rows[r][d];
        for (size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q != 0)
                for (size_t d = 0; d < cols; ++d) rows[i][d] -= q * rows[r][d];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<std::vector<Integer>> integer_relations(const std::vector<BC>& values, long prec,
                                                    const Integer& bound) {
    size_t n = values.size();
    if (n == 0) return {};
    // Scale factor ~ 2^(0.72 prec): relations must cancel to well below it.
    long scale_bits = static_cast<long>(prec * 0.72);
    BigFloat scale = pow_si(BigFloat::of(2L, prec), scale_bits);

    std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n + 2, Integer(0)));
    for (size_t i = 0; i < n; ++i) {
        basis[i][i] = 1;
        BC v(values[i].re.with_prec(prec), values[i].im.with_prec(prec));
        basis[i][n] = round_to_integer(v.re * scale);
        basis[i][n + 1] = round_to_integer(v.im * scale);
    }
    auto reduced = lll_reduce(std::move(basis));

    // A candidate row is a relation when the embedded part collapsed and the
    // exponents stayed small.
    std::vector<std::vector<Integer>> out;
    Integer cutoff = Integer(1) << static_cast<unsigned long>(scale_bits / 3);
    for (const auto& row : reduced) {
        bool small_tail = abs(row[n]) < cutoff && abs(row[n + 1]) < cutoff;
        if (!small_tail) continue;
        std::vector<Integer> a(row.begin(), row.begin() + static_cast<long>(n));
        bool nonzero = false, bounded = true;
        for (const Integer& z : a) {
            if (z != 0) nonzero = true;
            if (abs(z) > bound) bounded = false;
        }
        if (!nonzero || !bounded) continue;
        // Direct residual check at full precision.
        BC s(prec);
        for (size_t i = 0; i < n; ++i) {
            BC v(values[i].re.with_prec(prec), values[i].im.with_prec(prec));
            s += BC(BigFloat::of(a[i], prec), BigFloat(prec)) * v;
        }
        BigFloat tol = pow_si(BigFloat::of(2L, prec), -static_cast<long>(prec * 0.4));
        if (abs(s) < tol) out.push_back(std::move(a));
    }
    return hermite_normal_form(std::move(out));
}

}  // namespace gzp
