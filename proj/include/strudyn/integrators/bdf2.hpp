#pragma once

#include "strudyn/integrators/newton.hpp"
#include "strudyn/model/system.hpp"

namespace strudyn {

/// Iteration matrix M + (2h/3) C + (4h^2/9) K of the two-step BDF2 method.
class Bdf2Workspace {
public:
    Bdf2Workspace(const SecondOrderSystem& sys, double h);

    double h() const noexcept { return h_; }
    const SparseMatrix& matrix() const noexcept { return s_; }
    const Factorization& factorization() const noexcept { return s_factor_; }
    int last_iterations() const noexcept { return iters_; }

private:
    friend State bdf2_step(const SecondOrderSystem&, const State&, const State&, double, Bdf2Workspace&,
                           const NewtonConfig&);
    double h_;
    SparseMatrix s_;
    Factorization s_factor_;
    int iters_ = 0;
};

/// BDF2 on the first-order form: with b0 = 2h/3 and the extrapolated
/// v^ = (4 v^n - v^{n-1}) / 3, u^{n+1} - u^ = b0 w^{n+1} and
/// M (w^{n+1} - w^) = b0 F(u^{n+1}, w^{n+1}, t^{n+1}).
State bdf2_step(const SecondOrderSystem& sys, const State& prev, const State& state, double h, Bdf2Workspace& ws,
                const NewtonConfig& cfg = {});

} // namespace strudyn
