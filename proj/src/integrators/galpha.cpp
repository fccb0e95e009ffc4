#include "strudyn/integrators/galpha.hpp"

#include <cmath>
#include <limits>

#include "stage_solve.hpp"

namespace strudyn {

namespace {

void check_rho(double r)
{
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("rhoInf must lie in [0, 1]");
}

} // namespace

GAlphaParameters galpha_params(double r)
{
    check_rho(r);
    return {1.0 / ((1.0 + r) * (1.0 + r)), 0.5 * (3.0 - r) / (1.0 + r), r / (1.0 + r), (2.0 * r - 1.0) / (1.0 + r), r};
}

GAlphaParameters newmark_rho_params(double r)
{
    check_rho(r);
    return {1.0 / ((1.0 + r) * (1.0 + r)), 0.5 * (3.0 - r) / (1.0 + r), 0.0, 0.0, r};
}

GAlphaParameters newmark_params(double beta, double gammaN)
{
    if (!(beta > 0.0)) throw DomainError("newmark_params: beta must be positive");
    return {beta, gammaN, 0.0, 0.0, std::numeric_limits<double>::quiet_NaN()};
}

Vector initial_acceleration(const SecondOrderSystem& sys, const State& state)
{
    return factorize(sys.M, FactorKind::Spd).solve(net_force(sys, state.u, state.w, state.t));
}

GAlphaWorkspace::GAlphaWorkspace(const SecondOrderSystem& sys, double h, const GAlphaParameters& p)
    : h_(h), params_(p)
{
    if (!(h > 0.0)) throw DomainError("GAlphaWorkspace: step must be positive");
    if (p.alphaM >= 1.0 || p.alphaF >= 1.0) throw DomainError("GAlphaWorkspace: alpha weights must be below 1");
    s_ = combine3(1.0 - p.alphaM, sys.M, (1.0 - p.alphaF) * p.gammaN * h, sys.C, (1.0 - p.alphaF) * p.beta * h * h,
                  sys.K);
    s_factor_ = factorize(s_, FactorKind::Spd);
}

std::pair<State, Vector> galpha_step(const SecondOrderSystem& sys, const State& state, const Vector& an, double h,
                                     GAlphaWorkspace& ws, const NewtonConfig& cfg)
{
    if (std::abs(h - ws.h_) > 1e-14 * ws.h_) throw DomainError("galpha_step: workspace assembled for another step");
    const auto& p = ws.params_;
    const std::size_t n = sys.size();
    const Vector& un = state.u;
    const Vector& wn = state.w;
    const double bh2 = p.beta * h * h;

    // With d = u^{n+1} - u^n the new acceleration is a = (d - h w^n - h^2 (1/2 - beta) a^n) / (beta h^2);
    // the balance times beta h^2 is linear in d apart from g.
    Vector pred(n); // h w^n + h^2 (1/2 - beta) a^n
    for (std::size_t i = 0; i < n; ++i) pred[i] = h * wn[i] + h * h * (0.5 - p.beta) * an[i];
    Vector wpred(n); // w^{n+1} with a^{n+1} = 0 contribution removed
    for (std::size_t i = 0; i < n; ++i) wpred[i] = wn[i] + h * (1.0 - p.gammaN) * an[i];

    // rhs = (1-aM) M pred - aM beta h^2 M a^n - beta h^2 C [(1-aF)(wpred - gammaN pred/(beta h)) + aF w^n]
    //       - beta h^2 K u^n + beta h^2 z^{n+1-aF}
    Vector rhs(n, 0.0);
    sys.M.apply_add(pred, rhs, 1.0 - p.alphaM);
    sys.M.apply_add(an, rhs, -p.alphaM * bh2);
    Vector wc(n);
    for (std::size_t i = 0; i < n; ++i)
        wc[i] = (1.0 - p.alphaF) * (wpred[i] - p.gammaN * pred[i] / (p.beta * h)) + p.alphaF * wn[i];
    sys.C.apply_add(wc, rhs, -bh2);
    sys.K.apply_add(un, rhs, -bh2);
    if (sys.has_load()) {
        axpy(bh2 * (1.0 - p.alphaF), sys.load(state.t + h), rhs);
        axpy(bh2 * p.alphaF, sys.load(state.t), rhs);
    }
    const auto sol = detail::solve_stage(sys, {ws.s_, ws.s_factor_, bh2, 1.0 - p.alphaF, un, rhs}, cfg, "G-alpha");
    ws.iters_ = sol.iterations;

    const Vector& d = sol.x;
    Vector a1(n), u1(n), w1(n);
    for (std::size_t i = 0; i < n; ++i) {
        a1[i] = (d[i] - pred[i]) / bh2;
        u1[i] = un[i] + d[i];
        w1[i] = wpred[i] + h * p.gammaN * a1[i];
    }
    return {State{state.t + h, std::move(u1), std::move(w1)}, std::move(a1)};
}

} // namespace strudyn
