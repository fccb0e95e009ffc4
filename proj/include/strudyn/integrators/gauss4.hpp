#pragma once

#include "strudyn/integrators/newton.hpp"
#include "strudyn/model/system.hpp"

namespace strudyn {

/// Two-stage Gauss-Legendre collocation (order 4) on the first-order form.
///
/// The stage system is written in the stage displacement increments
/// D_i = U_i - u^n only; stage velocities follow from W = (1/h) A^{-1} D.
/// Unknowns are interleaved per dof, [D_1[0], D_2[0], D_1[1], ...], which
/// keeps the 2n x 2n matrix banded after reordering.
class Gauss4Workspace {
public:
    Gauss4Workspace(const SecondOrderSystem& sys, double h);

    double h() const noexcept { return h_; }
    /// Linear part of the stage matrix: (A^{-2}) x M + h A^{-1} x C + h^2 I x K.
    const SparseMatrix& matrix() const noexcept { return s_; }
    const Factorization& factorization() const noexcept { return s_factor_; }
    int last_iterations() const noexcept { return iters_; }

private:
    friend State gauss4_step(const SecondOrderSystem&, const State&, double, Gauss4Workspace&, const NewtonConfig&);
    double h_;
    SparseMatrix s_;
    Factorization s_factor_;
    int iters_ = 0;
};

/// Nodes 1/2 -+ sqrt(3)/6.
double gauss4_node(int stage);

State gauss4_step(const SecondOrderSystem& sys, const State& state, double h, Gauss4Workspace& ws,
                  const NewtonConfig& cfg = {});
State gauss4_step(const SecondOrderSystem& sys, const State& state, double h, const NewtonConfig& cfg = {});

} // namespace strudyn
