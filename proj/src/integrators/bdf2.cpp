#include "strudyn/integrators/bdf2.hpp"

#include <cmath>

#include "stage_solve.hpp"

namespace strudyn {

Bdf2Workspace::Bdf2Workspace(const SecondOrderSystem& sys, double h) : h_(h)
{
    if (!(h > 0.0)) throw DomainError("Bdf2Workspace: step must be positive");
    const double b0 = 2.0 * h / 3.0;
    s_ = combine3(1.0, sys.M, b0, sys.C, b0 * b0, sys.K);
    s_factor_ = factorize(s_, FactorKind::Spd);
}

State bdf2_step(const SecondOrderSystem& sys, const State& prev, const State& state, double h, Bdf2Workspace& ws,
                const NewtonConfig& cfg)
{
    if (std::abs(h - ws.h_) > 1e-14 * ws.h_) throw DomainError("bdf2_step: workspace assembled for another step");
    const std::size_t n = sys.size();
    require_same_size(prev.u.size(), n, "bdf2_step");
    const double b0 = 2.0 * h / 3.0;
    Vector uh(n), wh(n);
    for (std::size_t i = 0; i < n; ++i) {
        uh[i] = (4.0 * state.u[i] - prev.u[i]) / 3.0;
        wh[i] = (4.0 * state.w[i] - prev.w[i]) / 3.0;
    }
    // d = u^{n+1} - u^: S d - b0^2 g(u^ + d) = b0 M w^ - b0^2 K u^ + b0^2 z^{n+1}
    Vector rhs = sys.M.apply(wh);
    for (double& v : rhs) v *= b0;
    sys.K.apply_add(uh, rhs, -b0 * b0);
    if (sys.has_load()) axpy(b0 * b0, sys.load(state.t + h), rhs);
    const auto sol = detail::solve_stage(sys, {ws.s_, ws.s_factor_, b0 * b0, 1.0, uh, rhs}, cfg, "BDF2");
    ws.iters_ = sol.iterations;

    Vector u1(n), w1(n);
    for (std::size_t i = 0; i < n; ++i) {
        u1[i] = uh[i] + sol.x[i];
        w1[i] = sol.x[i] / b0;
    }
    return {state.t + h, std::move(u1), std::move(w1)};
}

} // namespace strudyn
