#pragma once

#include <optional>
#include <vector>

#include "core/poly.hpp"
#include "support/scalar.hpp"

namespace gzp {

template <class K>
using Mat = std::vector<std::vector<K>>;

template <class K>
Mat<K> mat_zero(size_t rows, size_t cols) {
    return Mat<K>(rows, std::vector<K>(cols, ScalarOps<K>::zero()));
}

// Reduced row-echelon form in place; returns pivot column indices.
// Exact fields use first-nonzero pivoting, numeric scalars largest-modulus.
template <class K>
std::vector<size_t> rre_inplace(Mat<K>& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = rows;
        if constexpr (ScalarOps<K>::exact) {
            for (size_t i = r; i < rows; ++i)
                if (!ScalarOps<K>::is_zero(a[i][c])) { p = i; break; }
        } else {
            BigFloat best(64);
            for (size_t i = r; i < rows; ++i) {
                BigFloat m = abs(a[i][c]);
                if (!m.is_zero() && (p == rows || m > best)) { best = m; p = i; }
            }
        }
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        K inv = ScalarOps<K>::one() / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || ScalarOps<K>::is_zero(a[i][c])) continue;
            K f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
size_t exact_rank(Mat<K> a) {
    return rre_inplace(a).size();
}

// Basis of the right kernel (exact fields).
template <class K>
Mat<K> exact_kernel(Mat<K> a) {
    static_assert(ScalarOps<K>::exact);
    if (a.empty()) return {};
    size_t cols = a[0].size();
    std::vector<size_t> pivots = rre_inplace(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    Mat<K> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<K> v(cols, ScalarOps<K>::zero());
        v[free_c] = ScalarOps<K>::one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves a*x = b for square exact systems; nullopt when singular.
template <class K>
std::optional<std::vector<K>> exact_solve(Mat<K> a, std::vector<K> b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = rre_inplace(a);
    if (pivots.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    std::vector<K> x(n, ScalarOps<K>::zero());
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

template <class K>
std::vector<K> mat_apply(const Mat<K>& a, const std::vector<K>& x) {
    std::vector<K> y(a.size(), ScalarOps<K>::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] = y[i] + a[i][j] * x[j];
    return y;
}

// Singular values of a complex matrix (descending), via cyclic Jacobi on the
// Hermitian Gram matrix.
std::vector<BigFloat> singular_values(const Mat<BC>& a, long prec);

// Numeric rank with relative threshold: count sigma_i > tol * sigma_max.
size_t numeric_rank(const Mat<BC>& a, long prec, const BigFloat& rel_tol);

// LLL reduction (delta = 3/4) of the lattice spanned by the rows of `basis`;
// exact rational Gram-Schmidt. Returns the reduced basis.
std::vector<std::vector<Integer>> lll_reduce(std::vector<std::vector<Integer>> basis);

// Row-style Hermite normal form of the lattice spanned by the rows; zero rows
// dropped, pivots positive, entries above pivots reduced.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

// Integer relations a (|a|_inf <= bound) with |sum a_i v_i| < residual_tol,
// found by LLL on a scaled real embedding. Heuristic; callers verify.
std::vector<std::vector<Integer>> integer_relations(const std::vector<BC>& values, long prec,
                                                    const Integer& bound);

}  // namespace gzp
