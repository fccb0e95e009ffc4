#include "strudyn/integrators/modal.hpp"

#include <algorithm>
#include <cmath>

#include "strudyn/linalg/eigen.hpp"

namespace strudyn {

namespace {

const SparseMatrix& undamped_mass(const SecondOrderSystem& sys)
{
    if (sys.C.max_abs() != 0.0 || sys.has_force() || sys.has_load())
        throw DomainError("ModalSolution: requires C = 0, g = 0 and z = 0");
    return sys.M;
}

} // namespace

ModalSolution::ModalSolution(const SparseMatrix& M, const SparseMatrix& K, std::span<const double> u0,
                             std::span<const double> v0)
{
    const std::size_t n = M.rows();
    if (!M.square() || K.rows() != n || K.cols() != n) throw DimensionError("ModalSolution: M and K must match");
    require_same_size(u0.size(), n, "ModalSolution");
    require_same_size(v0.size(), n, "ModalSolution");
    SymmetricEigen e = sym_generalized_eigen(K, M);
    lambda_ = std::move(e.values);
    modes_ = std::move(e.vectors);
    const double lmax = lambda_.empty() ? 0.0 : std::max(std::abs(lambda_.front()), std::abs(lambda_.back()));
    rigid_tol_ = 1e-12 * lmax;
    for (double l : lambda_)
        if (l < -1e-9 * std::max(lmax, 1.0)) throw DomainError("ModalSolution: stiffness is not semidefinite");

    // Coordinates q = V^T M y since V^T M V = I.
    const Vector mu = M.apply(u0);
    const Vector mv = M.apply(v0);
    a_.assign(n, 0.0);
    b_.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            a_[k] += modes_(i, k) * mu[i];
            b_[k] += modes_(i, k) * mv[i];
        }
}

ModalSolution::ModalSolution(const SecondOrderSystem& sys)
    : ModalSolution(undamped_mass(sys), sys.K, sys.u0, sys.v0)
{
}

State ModalSolution::at(double t) const
{
    const std::size_t n = a_.size();
    Vector q(n), dq(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double l = lambda_[k];
        if (l <= rigid_tol_) {
            q[k] = a_[k] + b_[k] * t;
            dq[k] = b_[k];
        } else {
            const double om = std::sqrt(l);
            const double c = std::cos(om * t);
            const double s = std::sin(om * t);
            q[k] = a_[k] * c + b_[k] * s / om;
            dq[k] = -a_[k] * om * s + b_[k] * c;
        }
    }
    State out{t, Vector(n, 0.0), Vector(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            out.u[i] += modes_(i, k) * q[k];
            out.w[i] += modes_(i, k) * dq[k];
        }
    return out;
}

std::pair<Vector, Vector> modal_exact(const SparseMatrix& M, const SparseMatrix& K, std::span<const double> u0,
                                      std::span<const double> v0, double t)
{
    State s = ModalSolution(M, K, u0, v0).at(t);
    return {std::move(s.u), std::move(s.w)};
}

} // namespace strudyn
