#include "strudyn/integrators/trbdf2.hpp"

#include <cmath>

#include "stage_solve.hpp"

namespace strudyn {

TrBdf2Coefficients TrBdf2Coefficients::from_gamma(double gamma)
{
    if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("TrBdf2Coefficients: gamma must lie in (0, 1)");
    return {gamma, (1.0 - gamma) / (2.0 - gamma), 1.0 / (gamma * (2.0 - gamma))};
}

TrBdf2Coefficients TrBdf2Coefficients::l_stable() { return from_gamma(2.0 - std::sqrt(2.0)); }

bool TrBdf2Coefficients::shares_matrix() const { return std::abs(gamma2 - 0.5 * gamma) <= 1e-15; }

TrBdf2Workspace::TrBdf2Workspace(const SecondOrderSystem& sys, double h, TrBdf2Coefficients coeffs)
    : h_(h), coeffs_(coeffs), shared_(coeffs.shares_matrix())
{
    if (!(h > 0.0)) throw DomainError("assemble_trbdf2: step must be positive");
    const double g = coeffs_.gamma;
    a1_ = combine3(1.0, sys.M, 0.5 * g * h, sys.C, 0.25 * g * g * h * h, sys.K);
    a1_factor_ = factorize(a1_, FactorKind::Spd);
    const double g2 = coeffs_.gamma2;
    if (!shared_) {
        a2_ = combine3(1.0, sys.M, g2 * h, sys.C, g2 * g2 * h * h, sys.K);
        a2_factor_ = factorize(a2_, FactorKind::Spd);
    }
    b2_ = linear_combination(1.0, sys.M, g2 * h, sys.C);
}

TrBdf2Workspace assemble_trbdf2(const SecondOrderSystem& sys, double h, TrBdf2Coefficients coeffs)
{
    return TrBdf2Workspace(sys, h, coeffs);
}

StageVelocities reconstruct_velocity(std::span<const double> u_next, std::span<const double> u_stage,
                                     std::span<const double> u_prev, std::span<const double> w_prev, double h,
                                     const TrBdf2Coefficients& c)
{
    if (!(h > 0.0)) throw DomainError("reconstruct_velocity: step must be positive");
    const std::size_t n = u_prev.size();
    require_same_size(u_next.size(), n, "reconstruct_velocity");
    require_same_size(u_stage.size(), n, "reconstruct_velocity");
    require_same_size(w_prev.size(), n, "reconstruct_velocity");
    StageVelocities out{Vector(n), Vector(n)};
    const double gh = c.gamma * h;
    const double g2h = c.gamma2 * h;
    for (std::size_t i = 0; i < n; ++i) {
        out.w_stage[i] = 2.0 * (u_stage[i] - u_prev[i] - 0.5 * gh * w_prev[i]) / gh;
        out.w_next[i] = (u_next[i] - (1.0 - c.gamma3) * u_prev[i] - c.gamma3 * u_stage[i]) / g2h;
    }
    return out;
}

std::vector<Vector> recompute_velocities(const std::vector<Vector>& levels, const std::vector<Vector>& stages,
                                         std::span<const double> w0, double h, const TrBdf2Coefficients& coeffs)
{
    if (levels.empty() || stages.size() + 1 != levels.size())
        throw DimensionError("recompute_velocities: need one stage per step");
    std::vector<Vector> w{Vector(w0.begin(), w0.end())};
    for (std::size_t n = 0; n < stages.size(); ++n)
        w.push_back(reconstruct_velocity(levels[n + 1], stages[n], levels[n], w[n], h, coeffs).w_next);
    return w;
}

State trbdf2_step(const SecondOrderSystem& sys, const State& state, double h, TrBdf2Workspace& ws,
                  const NewtonConfig& cfg)
{
    if (std::abs(h - ws.h_) > 1e-14 * ws.h_) throw DomainError("trbdf2_step: workspace assembled for another step");
    const auto& k = ws.coeffs_;
    const std::size_t n = sys.size();
    const double gh = k.gamma * h;
    const double c1 = 0.25 * gh * gh;
    const double c2 = k.gamma2 * k.gamma2 * h * h;
    const Vector& un = state.u;
    const Vector& wn = state.w;

    // Trapezoidal stage. (M + gh/2 C - c1 K) u^n - A1 u^n collapses to -2 c1 K u^n.
    Vector b1 = sys.M.apply(wn);
    for (double& v : b1) v *= gh;
    sys.K.apply_add(un, b1, -2.0 * c1);
    if (sys.has_force()) axpy(c1, sys.force(un), b1);
    if (sys.has_load()) {
        axpy(c1, sys.load(state.t + gh), b1);
        axpy(c1, sys.load(state.t), b1);
    }
    const auto s1 = detail::solve_stage(sys, {ws.a1_, ws.a1_factor_, c1, 1.0, un, b1}, cfg, "TR-BDF2 stage 1");
    ws.iters_[0] = s1.iterations;
    Vector ug = add(un, s1.x);

    // BDF2 stage.
    const Vector wg = reconstruct_velocity(ug, ug, un, wn, h, k).w_stage;
    Vector b2 = sys.M.apply(wn);
    for (double& v : b2) v *= k.gamma2 * (1.0 - k.gamma3) * h;
    sys.M.apply_add(wg, b2, k.gamma2 * k.gamma3 * h);
    Vector mix(n);
    for (std::size_t i = 0; i < n; ++i) mix[i] = (1.0 - k.gamma3) * un[i] + k.gamma3 * ug[i];
    ws.b2_.apply_add(mix, b2);
    ws.stage2_matrix().apply_add(ug, b2, -1.0);
    if (sys.has_load()) axpy(c2, sys.load(state.t + h), b2);
    const auto s2 = detail::solve_stage(sys, {ws.stage2_matrix(), ws.stage2_factorization(), c2, 1.0, ug, b2}, cfg,
                                        "TR-BDF2 stage 2");
    ws.iters_[1] = s2.iterations;
    Vector un1 = add(ug, s2.x);

    StageVelocities vel = reconstruct_velocity(un1, ug, un, wn, h, k);
    ws.u_stage_ = std::move(ug);
    ws.w_stage_ = std::move(vel.w_stage);
    return {state.t + h, std::move(un1), std::move(vel.w_next)};
}

} // namespace strudyn
