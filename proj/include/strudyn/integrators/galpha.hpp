#pragma once

#include <utility>

#include "strudyn/integrators/newton.hpp"
#include "strudyn/model/system.hpp"

namespace strudyn {

/// Newmark / generalized-alpha parameters. Averages follow
/// phi^{n+1-alpha} = (1 - alpha) phi^{n+1} + alpha phi^n.
struct GAlphaParameters {
    double beta = 0.25;
    double gammaN = 0.5;
    double alphaF = 0.0;
    double alphaM = 0.0;
    /// NaN when the parameters were not derived from a dissipation target.
    double rhoInf = 1.0;
};

/// Chung-Hulbert generalized-alpha from the high-frequency spectral radius:
/// beta = 1/(1+r)^2, gammaN = (3-r)/(2(1+r)), alphaM = (2r-1)/(1+r),
/// alphaF = r/(1+r). Throws DomainError outside [0, 1].
GAlphaParameters galpha_params(double rhoInf);

/// Plain Newmark (alphaF = alphaM = 0) with the same beta, gammaN map.
GAlphaParameters newmark_rho_params(double rhoInf);

/// Plain Newmark with explicit beta and gammaN.
GAlphaParameters newmark_params(double beta, double gammaN);

/// M a0 = -C w0 - K u0 + g(u0) + z(t0).
Vector initial_acceleration(const SecondOrderSystem& sys, const State& state);

/// Iteration matrix (1 - aM) M + (1 - aF) gammaN h C + (1 - aF) beta h^2 K
/// and its factorization, reused by every step of a constant-h run.
class GAlphaWorkspace {
public:
    GAlphaWorkspace(const SecondOrderSystem& sys, double h, const GAlphaParameters& params);

    double h() const noexcept { return h_; }
    const GAlphaParameters& params() const noexcept { return params_; }
    const SparseMatrix& matrix() const noexcept { return s_; }
    const Factorization& factorization() const noexcept { return s_factor_; }
    int last_iterations() const noexcept { return iters_; }

private:
    friend std::pair<State, Vector> galpha_step(const SecondOrderSystem&, const State&, const Vector&, double,
                                                GAlphaWorkspace&, const NewtonConfig&);
    double h_;
    GAlphaParameters params_;
    SparseMatrix s_;
    Factorization s_factor_;
    int iters_ = 0;
};

/// One generalized-alpha step. The balance
/// M a^{n+1-aM} + C w^{n+1-aF} + K u^{n+1-aF} = g(u^{n+1-aF}) + z^{n+1-aF}
/// is solved by Newton on the displacement increment, then
/// u^{n+1} = u^n + h w^n + h^2 ((1/2 - beta) a^n + beta a^{n+1}) and
/// w^{n+1} = w^n + h ((1 - gammaN) a^n + gammaN a^{n+1}).
std::pair<State, Vector> galpha_step(const SecondOrderSystem& sys, const State& state, const Vector& accel, double h,
                                     GAlphaWorkspace& ws, const NewtonConfig& cfg = {});

} // namespace strudyn
