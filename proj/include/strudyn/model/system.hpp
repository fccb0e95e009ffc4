#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strudyn/linalg/factorization.hpp"
#include "strudyn/linalg/sparse_matrix.hpp"
#include "strudyn/linalg/vector_ops.hpp"

namespace strudyn {

using ForceFn = std::function<Vector(std::span<const double>)>;
using ForceJacobianFn = std::function<SparseMatrix(std::span<const double>)>;
using LoadFn = std::function<Vector(double)>;

/// M y'' = -C y' - K y + g(y) + z(t), with y(0) = u0 and y'(0) = v0.
///
/// g holds only the part of the force not already represented by K; an
/// empty g (or z) means identically zero. g and z must be pure.
struct SecondOrderSystem {
    SparseMatrix M;
    SparseMatrix C;
    SparseMatrix K;
    ForceFn g;
    ForceJacobianFn g_jacobian;
    LoadFn z;
    Vector u0;
    Vector v0;

    std::size_t size() const noexcept { return M.rows(); }
    bool has_force() const noexcept { return static_cast<bool>(g); }
    bool has_load() const noexcept { return static_cast<bool>(z); }
    bool is_linear() const noexcept { return !g; }

    Vector force(std::span<const double> y) const;
    Vector load(double t) const;

    /// Analytic Jacobian when supplied, forward differences otherwise
    /// (step 1e-7 (1 + |y_i|)).
    SparseMatrix force_jacobian(std::span<const double> y) const;

    /// Checks dimensions, symmetry of M and K, and finiteness of g(u0).
    void validate() const;
};

/// Builds a system from matrices only: C defaults to zero, g and z to none.
SecondOrderSystem make_linear_system(SparseMatrix M, SparseMatrix K, Vector u0, Vector v0,
                                     std::optional<SparseMatrix> C = std::nullopt);

/// Damped scalar oscillator m y'' + c y' + k y = 0.
SecondOrderSystem make_scalar_oscillator(double m, double c, double k, double u0, double v0);

/// Nonlinear two-dof benchmark: y1'' = -(1e4 y1 (1 + 1e4 y1^2) - tanh(y2 - y1)),
/// y2'' = -tanh(y2 - y1), y(0) = [1, 1.5], y'(0) = 0. The linear 1e4 y1 term
/// lives in K.
SecondOrderSystem make_twodof_system();

struct State {
    double t = 0.0;
    Vector u;
    Vector w;
};

struct Trajectory {
    std::string method;
    double h = 0.0;
    std::vector<State> states;
    /// Non-empty when only selected components were recorded.
    std::vector<std::size_t> probes;
};

struct FirstOrderRhs {
    Vector du;
    Vector dw;
};

/// du = w and M dw = -C w - K u + g(u) + z(t).
FirstOrderRhs first_order_rhs(const SecondOrderSystem& sys, const State& state);
FirstOrderRhs first_order_rhs(const SecondOrderSystem& sys, const Factorization& mass, const State& state);

/// Total force -C w - K u + g(u) + z(t), i.e. M times the acceleration.
Vector net_force(const SecondOrderSystem& sys, std::span<const double> u, std::span<const double> w, double t);

} // namespace strudyn
