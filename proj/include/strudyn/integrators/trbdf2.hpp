#pragma once

#include <span>
#include <vector>

#include "strudyn/integrators/newton.hpp"
#include "strudyn/model/system.hpp"

namespace strudyn {

/// gamma is the fraction of the step covered by the trapezoidal stage;
/// gamma2 = (1 - gamma) / (2 - gamma), gamma3 = 1 / (gamma (2 - gamma)).
struct TrBdf2Coefficients {
    double gamma = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;

    static TrBdf2Coefficients from_gamma(double gamma);
    /// gamma = 2 - sqrt(2): L-stable, and gamma2 = gamma / 2 so both stages
    /// share one iteration matrix.
    static TrBdf2Coefficients l_stable();

    bool shares_matrix() const;
};

/// Everything a constant-step TR-BDF2 run reuses between steps.
///
/// A1 = M + (gamma h / 2) C + (gamma^2 h^2 / 4) K drives the trapezoidal
/// stage and A2 = M + gamma2 h C + gamma2^2 h^2 K the BDF2 stage. With the
/// default coefficients they coincide and only one factorization is held.
class TrBdf2Workspace {
public:
    TrBdf2Workspace(const SecondOrderSystem& sys, double h, TrBdf2Coefficients coeffs = TrBdf2Coefficients::l_stable());

    double h() const noexcept { return h_; }
    const TrBdf2Coefficients& coefficients() const noexcept { return coeffs_; }
    const SparseMatrix& matrix() const noexcept { return a1_; }
    const Factorization& factorization() const noexcept { return a1_factor_; }
    const SparseMatrix& stage2_matrix() const noexcept { return shared_ ? a1_ : a2_; }
    const Factorization& stage2_factorization() const noexcept { return shared_ ? a1_factor_ : a2_factor_; }

    /// u^{n+gamma} and w^{n+gamma} of the most recent step.
    const Vector& stage_displacement() const noexcept { return u_stage_; }
    const Vector& stage_velocity() const noexcept { return w_stage_; }
    /// Newton iterations used by the two stages of the most recent step.
    int stage1_iterations() const noexcept { return iters_[0]; }
    int stage2_iterations() const noexcept { return iters_[1]; }

private:
    friend State trbdf2_step(const SecondOrderSystem&, const State&, double, TrBdf2Workspace&, const NewtonConfig&);

    double h_;
    TrBdf2Coefficients coeffs_;
    bool shared_;
    SparseMatrix a1_;
    Factorization a1_factor_;
    SparseMatrix a2_;
    Factorization a2_factor_;
    SparseMatrix b2_; // M + gamma2 h C
    Vector u_stage_;
    Vector w_stage_;
    int iters_[2] = {0, 0};
};

TrBdf2Workspace assemble_trbdf2(const SecondOrderSystem& sys, double h,
                                TrBdf2Coefficients coeffs = TrBdf2Coefficients::l_stable());

/// One TR-BDF2 step in displacement-only form. Each stage solves
/// A d - c g(u + d) = b for the displacement increment; velocities are
/// reconstructed with reconstruct_velocity.
State trbdf2_step(const SecondOrderSystem& sys, const State& state, double h, TrBdf2Workspace& ws,
                  const NewtonConfig& cfg = {});

struct StageVelocities {
    Vector w_stage;
    Vector w_next;
};

/// w^{n+gamma} = 2 (u^{n+gamma} - u^n) / (gamma h) - w^n and
/// w^{n+1} = (u^{n+1} - (1 - gamma3) u^n - gamma3 u^{n+gamma}) / (gamma2 h).
StageVelocities reconstruct_velocity(std::span<const double> u_next, std::span<const double> u_stage,
                                     std::span<const double> u_prev, std::span<const double> w_prev, double h,
                                     const TrBdf2Coefficients& coeffs = TrBdf2Coefficients::l_stable());

/// Rebuilds the velocity history from displacements alone: levels[n] = u^n,
/// stages[n] = u^{n+gamma} for the step starting at level n.
std::vector<Vector> recompute_velocities(const std::vector<Vector>& levels, const std::vector<Vector>& stages,
                                         std::span<const double> w0, double h,
                                         const TrBdf2Coefficients& coeffs = TrBdf2Coefficients::l_stable());

} // namespace strudyn
