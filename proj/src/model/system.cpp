#include "strudyn/model/system.hpp"

#include <cmath>
#include <utility>

namespace strudyn {

Vector SecondOrderSystem::force(std::span<const double> y) const
{
    if (!g) return Vector(size(), 0.0);
    return g(y);
}

Vector SecondOrderSystem::load(double t) const
{
    if (!z) return Vector(size(), 0.0);
    return z(t);
}

SparseMatrix SecondOrderSystem::force_jacobian(std::span<const double> y) const
{
    const std::size_t n = size();
    if (!g) return SparseMatrix(n, n);
    if (g_jacobian) return g_jacobian(y);
    const Vector g0 = g(y);
    Vector yp(y.begin(), y.end());
    std::vector<Triplet> t;
    for (std::size_t j = 0; j < n; ++j) {
        const double step = 1e-7 * (1.0 + std::abs(y[j]));
        yp[j] = y[j] + step;
        const Vector g1 = g(yp);
        yp[j] = y[j];
        for (std::size_t i = 0; i < n; ++i) {
            const double d = (g1[i] - g0[i]) / step;
            if (d != 0.0) t.push_back({i, j, d});
        }
    }
    return SparseMatrix::from_triplets(n, n, t);
}

void SecondOrderSystem::validate() const
{
    const std::size_t n = size();
    if (!M.square() || K.rows() != n || K.cols() != n || C.rows() != n || C.cols() != n)
        throw DimensionError("SecondOrderSystem: matrix dimensions differ");
    if (u0.size() != n || v0.size() != n) throw DimensionError("SecondOrderSystem: initial data has wrong length");
    if (!M.is_symmetric()) throw DomainError("SecondOrderSystem: M is not symmetric");
    if (!K.is_symmetric()) throw DomainError("SecondOrderSystem: K is not symmetric");
    if (!all_finite(force(u0))) throw DomainError("SecondOrderSystem: g(u0) is not finite");
}

SecondOrderSystem make_linear_system(SparseMatrix M, SparseMatrix K, Vector u0, Vector v0,
                                     std::optional<SparseMatrix> C)
{
    SecondOrderSystem sys;
    const std::size_t n = M.rows();
    sys.C = C ? std::move(*C) : SparseMatrix(n, n);
    sys.M = std::move(M);
    sys.K = std::move(K);
    sys.u0 = std::move(u0);
    sys.v0 = std::move(v0);
    sys.validate();
    return sys;
}

SecondOrderSystem make_scalar_oscillator(double m, double c, double k, double u0, double v0)
{
    const std::vector<double> mm{m}, cc{c}, kk{k};
    return make_linear_system(SparseMatrix::diagonal(mm), SparseMatrix::diagonal(kk), {u0}, {v0},
                              SparseMatrix::diagonal(cc));
}

SecondOrderSystem make_twodof_system()
{
    SecondOrderSystem sys;
    sys.M = SparseMatrix::identity(2);
    sys.C = SparseMatrix(2, 2);
    const std::vector<double> k{1e4, 0.0};
    sys.K = SparseMatrix::diagonal(k);
    sys.g = [](std::span<const double> y) {
        const double th = std::tanh(y[1] - y[0]);
        return Vector{-1e8 * y[0] * y[0] * y[0] + th, -th};
    };
    sys.g_jacobian = [](std::span<const double> y) {
        const double th = std::tanh(y[1] - y[0]);
        const double sech2 = 1.0 - th * th;
        const std::vector<Triplet> t{{0, 0, -3e8 * y[0] * y[0] - sech2},
                                     {0, 1, sech2},
                                     {1, 0, sech2},
                                     {1, 1, -sech2}};
        return SparseMatrix::from_triplets(2, 2, t);
    };
    sys.u0 = {1.0, 1.5};
    sys.v0 = {0.0, 0.0};
    sys.validate();
    return sys;
}

Vector net_force(const SecondOrderSystem& sys, std::span<const double> u, std::span<const double> w, double t)
{
    Vector f = sys.force(u);
    axpy(1.0, sys.load(t), f);
    sys.C.apply_add(w, f, -1.0);
    sys.K.apply_add(u, f, -1.0);
    return f;
}

FirstOrderRhs first_order_rhs(const SecondOrderSystem& sys, const Factorization& mass, const State& state)
{
    if (!all_finite(state.u) || !all_finite(state.w)) throw DomainError("first_order_rhs: non-finite state");
    return {state.w, mass.solve(net_force(sys, state.u, state.w, state.t))};
}

FirstOrderRhs first_order_rhs(const SecondOrderSystem& sys, const State& state)
{
    return first_order_rhs(sys, factorize(sys.M, FactorKind::Spd), state);
}

} // namespace strudyn
