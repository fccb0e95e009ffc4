#include "strudyn/integrators/theta.hpp"

#include <cmath>

#include "stage_solve.hpp"

namespace strudyn {

ThetaWorkspace::ThetaWorkspace(const SecondOrderSystem& sys, double h, double theta) : h_(h), theta_(theta)
{
    if (!(h > 0.0)) throw DomainError("ThetaWorkspace: step must be positive");
    if (!(theta >= 0.5 && theta <= 1.0)) throw DomainError("ThetaWorkspace: theta must lie in [1/2, 1]");
    s_ = combine3(1.0, sys.M, theta * h, sys.C, theta * theta * h * h, sys.K);
    s_factor_ = factorize(s_, FactorKind::Spd);
}

State theta_step(const SecondOrderSystem& sys, const State& state, double h, ThetaWorkspace& ws,
                 const NewtonConfig& cfg)
{
    if (std::abs(h - ws.h_) > 1e-14 * ws.h_) throw DomainError("theta_step: workspace assembled for another step");
    const double th = ws.theta_;
    const std::size_t n = sys.size();
    const Vector& un = state.u;
    const Vector& wn = state.w;
    const double c = th * th * h * h;

    // d = u^{n+1} - u^n, w^{n+1} = (d - h (1 - theta) w^n) / (theta h); the balance times theta h is
    // S d - c g(u^n + d) = h M w^n + theta (1 - theta) h^2 (C w^n + F^n) - c K u^n + c z^{n+1}.
    Vector rhs = sys.M.apply(wn);
    for (double& v : rhs) v *= h;
    sys.K.apply_add(un, rhs, -c);
    if (th < 1.0) {
        const double e = th * (1.0 - th) * h * h;
        sys.C.apply_add(wn, rhs, e);
        axpy(e, net_force(sys, un, wn, state.t), rhs);
    }
    if (sys.has_load()) axpy(c, sys.load(state.t + h), rhs);
    const auto sol = detail::solve_stage(sys, {ws.s_, ws.s_factor_, c, 1.0, un, rhs}, cfg, "theta-method");
    ws.iters_ = sol.iterations;

    Vector u1(n), w1(n);
    for (std::size_t i = 0; i < n; ++i) {
        u1[i] = un[i] + sol.x[i];
        w1[i] = (sol.x[i] - h * (1.0 - th) * wn[i]) / (th * h);
    }
    return {state.t + h, std::move(u1), std::move(w1)};
}

State theta_step(const SecondOrderSystem& sys, const State& state, double h, double theta, const NewtonConfig& cfg)
{
    ThetaWorkspace ws(sys, h, theta);
    return theta_step(sys, state, h, ws, cfg);
}

State implicit_euler_step(const SecondOrderSystem& sys, const State& state, double h, ThetaWorkspace& ws,
                          const NewtonConfig& cfg)
{
    if (ws.theta() != 1.0) throw DomainError("implicit_euler_step: workspace must have theta = 1");
    return theta_step(sys, state, h, ws, cfg);
}

State implicit_euler_step(const SecondOrderSystem& sys, const State& state, double h, const NewtonConfig& cfg)
{
    return theta_step(sys, state, h, 1.0, cfg);
}

} // namespace strudyn
