#include "strudyn/integrators/newton.hpp"

#include <cmath>

namespace strudyn {

void NewtonConfig::validate() const
{
    if (!(atol > 0.0) || !(rtol > 0.0)) throw DomainError("NewtonConfig: tolerances must be positive");
    if (max_iterations < 1) throw DomainError("NewtonConfig: max_iterations must be at least 1");
    if (!(fd_step > 0.0)) throw DomainError("NewtonConfig: fd_step must be positive");
}

NewtonResult newton_solve(const ResidualFn& residual, const JacobianFn& jacobian, Vector x0,
                          const NewtonConfig& cfg, const std::string& stage)
{
    cfg.validate();
    NewtonResult res;
    res.x = std::move(x0);
    Vector r = residual(res.x);
    if (!all_finite(r)) throw DomainError(stage + ": residual not finite at the initial guess");
    double rn = norm2(r);
    const double tol = cfg.atol * std::sqrt(static_cast<double>(res.x.size())) + cfg.rtol * rn;
    res.residual_norm = rn;
    // At least one correction unless the guess is exact: a linear stage then
    // always gets its solve, however small the data.
    if (rn == 0.0) return res;

    Factorization jac = jacobian(res.x);
    ++res.factorizations;
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        const Vector dx = jac.solve(r);
        double lambda = 1.0;
        Vector trial(res.x.size());
        Vector rt;
        double rtn = 0.0;
        bool damped = false;
        for (int halving = 0; halving <= 8; ++halving) {
            for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = res.x[i] - lambda * dx[i];
            rt = residual(trial);
            rtn = all_finite(rt) ? norm2(rt) : INFINITY;
            if (rtn <= rn) break;
            damped = true;
            lambda *= 0.5;
        }
        if (!std::isfinite(rtn)) throw ConvergenceError(stage, it, rn);
        const bool slow = rtn > 0.5 * rn;
        res.x = std::move(trial);
        r = std::move(rt);
        rn = rtn;
        res.iterations = it;
        res.residual_norm = rn;
        if (rn <= tol) return res;
        if (damped || slow) {
            jac = jacobian(res.x);
            ++res.factorizations;
        }
    }
    throw ConvergenceError(stage, cfg.max_iterations, rn);
}

NewtonResult newton_solve(const ResidualFn& residual, Vector x0, const NewtonConfig& cfg, const std::string& stage)
{
    const double fd = cfg.fd_step;
    JacobianFn jac = [&residual, fd](std::span<const double> x) {
        const std::size_t n = x.size();
        const Vector r0 = residual(x);
        Vector xp(x.begin(), x.end());
        DenseMatrix j(n, n);
        for (std::size_t c = 0; c < n; ++c) {
            const double step = fd * (1.0 + std::abs(x[c]));
            xp[c] = x[c] + step;
            const Vector r1 = residual(xp);
            xp[c] = x[c];
            for (std::size_t i = 0; i < n; ++i) j(i, c) = (r1[i] - r0[i]) / step;
        }
        return factorize(j, FactorKind::General);
    };
    return newton_solve(residual, jac, std::move(x0), cfg, stage);
}

} // namespace strudyn
