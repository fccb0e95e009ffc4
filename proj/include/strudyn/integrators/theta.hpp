#pragma once

#include "strudyn/integrators/newton.hpp"
#include "strudyn/model/system.hpp"

namespace strudyn {

/// Iteration matrix M + theta h C + theta^2 h^2 K.
class ThetaWorkspace {
public:
    ThetaWorkspace(const SecondOrderSystem& sys, double h, double theta);

    double h() const noexcept { return h_; }
    double theta() const noexcept { return theta_; }
    const SparseMatrix& matrix() const noexcept { return s_; }
    const Factorization& factorization() const noexcept { return s_factor_; }
    int last_iterations() const noexcept { return iters_; }

private:
    friend State theta_step(const SecondOrderSystem&, const State&, double, ThetaWorkspace&, const NewtonConfig&);
    double h_;
    double theta_;
    SparseMatrix s_;
    Factorization s_factor_;
    int iters_ = 0;
};

/// theta-method on the first-order form:
/// u^{n+1} = u^n + h (theta w^{n+1} + (1 - theta) w^n) and
/// M (w^{n+1} - w^n) = h (theta F^{n+1} + (1 - theta) F^n).
/// theta = 1/2 is Crank-Nicolson, theta = 1 implicit Euler.
State theta_step(const SecondOrderSystem& sys, const State& state, double h, ThetaWorkspace& ws,
                 const NewtonConfig& cfg = {});

/// Convenience overload that assembles a fresh workspace.
State theta_step(const SecondOrderSystem& sys, const State& state, double h, double theta,
                 const NewtonConfig& cfg = {});

State implicit_euler_step(const SecondOrderSystem& sys, const State& state, double h, ThetaWorkspace& ws,
                          const NewtonConfig& cfg = {});
State implicit_euler_step(const SecondOrderSystem& sys, const State& state, double h, const NewtonConfig& cfg = {});

} // namespace strudyn
