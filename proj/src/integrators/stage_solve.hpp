#pragma once

#include <span>
#include <string>

#include "strudyn/integrators/newton.hpp"
#include "strudyn/model/system.hpp"

namespace strudyn::detail {

// Solves S d - c g(base + s d) = rhs for d, the shape of every
// displacement-only implicit stage in this library.
struct StageProblem {
    const SparseMatrix& S;
    const Factorization& S_factor;
    double g_coeff = 0.0;
    double g_scale = 1.0;
    std::span<const double> g_base;
    const Vector& rhs;
};

inline NewtonResult solve_stage(const SecondOrderSystem& sys, const StageProblem& p, const NewtonConfig& cfg,
                                const std::string& stage)
{
    const std::size_t n = p.rhs.size();
    auto arg = [&p, n](std::span<const double> d) {
        Vector y(p.g_base.begin(), p.g_base.end());
        for (std::size_t i = 0; i < n; ++i) y[i] += p.g_scale * d[i];
        return y;
    };
    ResidualFn residual = [&](std::span<const double> d) {
        Vector r = p.S.apply(d);
        if (sys.has_force()) axpy(-p.g_coeff, sys.force(arg(d)), r);
        axpy(-1.0, p.rhs, r);
        return r;
    };
    JacobianFn jacobian = [&](std::span<const double> d) -> Factorization {
        if (!sys.has_force()) return p.S_factor;
        const SparseMatrix jg = sys.force_jacobian(arg(d));
        return factorize(linear_combination(1.0, p.S, -p.g_coeff * p.g_scale, jg), FactorKind::General);
    };
    return newton_solve(residual, jacobian, Vector(n, 0.0), cfg, stage);
}

} // namespace strudyn::detail
