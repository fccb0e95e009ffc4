#pragma once

#include <utility>

#include "strudyn/linalg/dense_matrix.hpp"
#include "strudyn/model/system.hpp"

namespace strudyn {

/// Exact solution of M y'' + K y = 0 by expansion in M-orthonormal modes of
/// the pencil (K, M). Modes with lambda <= 1e-12 lambda_max are treated as
/// rigid and evolve as a + b t. The eigen-solve is dense, so this is meant
/// for systems up to a few hundred dofs.
class ModalSolution {
public:
    ModalSolution(const SparseMatrix& M, const SparseMatrix& K, std::span<const double> u0,
                  std::span<const double> v0);
    /// Rejects damping, nonlinear forces and loads.
    explicit ModalSolution(const SecondOrderSystem& sys);

    State at(double t) const;

    std::size_t size() const noexcept { return a_.size(); }
    const std::vector<double>& eigenvalues() const noexcept { return lambda_; }

private:
    std::vector<double> lambda_;
    DenseMatrix modes_;
    Vector a_; // modal displacement at t = 0
    Vector b_; // modal velocity at t = 0
    double rigid_tol_ = 0.0;
};

std::pair<Vector, Vector> modal_exact(const SparseMatrix& M, const SparseMatrix& K, std::span<const double> u0,
                                      std::span<const double> v0, double t);

} // namespace strudyn
