#include "core/periods.hpp"

#include "core/linalg.hpp"

namespace gzp {

namespace {

std::vector<BC> periods_at(const DiffConfig<BC>& cfg, long prec) {
    return flatten(period_vector(cfg, default_paths(cfg, prec), prec));
}

}  // namespace

size_t period_map_jacobian_rank(const DiffConfig<BC>& cfg, long prec, const BigFloat& rel_tol) {
    validate_config(cfg);
    size_t m = cfg.zeros.size() - 1;
    size_t n1 = cfg.poles.size();
    size_t dim = m + n1;  // lambda + x_1..m + y_1..(n) parameters

    std::vector<BC*> params;
    DiffConfig<BC> work = cfg;
    params.push_back(&work.lambda);
    for (size_t i = 1; i < work.zeros.size(); ++i) params.push_back(&work.zeros[i]);
    for (size_t j = 1; j < work.poles.size(); ++j) params.push_back(&work.poles[j]);
    if (params.size() != dim)
        throw Error(ErrorKind::InputError, "jacobian rank needs a canonical configuration");

    BigFloat h = pow_si(BigFloat::of(2L, prec), -(prec / 4));
    BC hstep(h, BigFloat(prec));
    Mat<BC> jac = mat_zero<BC>(dim, dim);
    for (size_t c = 0; c < dim; ++c) {
        BC saved = *params[c];
        *params[c] = saved + hstep;
        std::vector<BC> plus = periods_at(work, prec);
        *params[c] = saved - hstep;
        std::vector<BC> minus = periods_at(work, prec);
        *params[c] = saved;
        for (size_t r = 0; r < dim; ++r)
            jac[r][c] = (plus[r] - minus[r]) / (hstep + hstep);
    }
    return numeric_rank(jac, prec, rel_tol);
}

}  // namespace gzp
