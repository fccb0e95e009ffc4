#include "strudyn/integrators/gauss4.hpp"

#include <array>
#include <cmath>

namespace strudyn {

namespace {

const double kSqrt3 = std::sqrt(3.0);
// Inverse of the Butcher matrix [[1/4, 1/4 - s/6], [1/4 + s/6, 1/4]].
const std::array<std::array<double, 2>, 2> kD = {{{3.0, -3.0 + 2.0 * kSqrt3}, {-3.0 - 2.0 * kSqrt3, 3.0}}};

std::array<std::array<double, 2>, 2> d_squared()
{
    std::array<std::array<double, 2>, 2> r{};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) r[i][k] = kD[i][0] * kD[0][k] + kD[i][1] * kD[1][k];
    return r;
}

// Blocks (i, k) of a 2n x 2n interleaved matrix: sum_m coef_m[i][k] * A_m.
void add_blocks(std::vector<Triplet>& out, const SparseMatrix& a, const std::array<std::array<double, 2>, 2>& coef)
{
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t p = a.offsets()[r]; p < a.offsets()[r + 1]; ++p) {
            const std::size_t c = a.columns()[p];
            const double v = a.values()[p];
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t k = 0; k < 2; ++k)
                    if (coef[i][k] != 0.0) out.push_back({2 * r + i, 2 * c + k, coef[i][k] * v});
        }
}

} // namespace

double gauss4_node(int stage)
{
    if (stage != 0 && stage != 1) throw DomainError("gauss4_node: stage must be 0 or 1");
    return stage == 0 ? 0.5 - kSqrt3 / 6.0 : 0.5 + kSqrt3 / 6.0;
}

Gauss4Workspace::Gauss4Workspace(const SecondOrderSystem& sys, double h) : h_(h)
{
    if (!(h > 0.0)) throw DomainError("Gauss4Workspace: step must be positive");
    const std::size_t n = sys.size();
    std::vector<Triplet> t;
    add_blocks(t, sys.M, d_squared());
    add_blocks(t, sys.C, {{{h * kD[0][0], h * kD[0][1]}, {h * kD[1][0], h * kD[1][1]}}});
    add_blocks(t, sys.K, {{{h * h, 0.0}, {0.0, h * h}}});
    s_ = SparseMatrix::from_triplets(2 * n, 2 * n, t);
    s_factor_ = factorize(s_, FactorKind::General);
}

State gauss4_step(const SecondOrderSystem& sys, const State& state, double h, Gauss4Workspace& ws,
                  const NewtonConfig& cfg)
{
    if (std::abs(h - ws.h_) > 1e-14 * ws.h_) throw DomainError("gauss4_step: workspace assembled for another step");
    const std::size_t n = sys.size();
    const Vector& u = state.u;
    const Vector& w = state.w;
    const double rowsum[2] = {kD[0][0] + kD[0][1], kD[1][0] + kD[1][1]};

    // Constant part: -h (D 1)_i M w - h^2 K u - h^2 z(t + c_i h).
    Vector mw = sys.M.apply(w);
    Vector ku = sys.K.apply(u);
    Vector base(2 * n);
    for (int s = 0; s < 2; ++s) {
        Vector z = sys.has_load() ? sys.load(state.t + gauss4_node(s) * h) : Vector(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) base[2 * i + s] = -h * rowsum[s] * mw[i] + h * h * (ku[i] - z[i]);
    }
    auto stage_disp = [&](std::span<const double> x, int s) {
        Vector y(u);
        for (std::size_t i = 0; i < n; ++i) y[i] += x[2 * i + s];
        return y;
    };

    ResidualFn residual = [&](std::span<const double> x) {
        Vector r = ws.s_.apply(x);
        axpy(1.0, base, r);
        if (sys.has_force())
            for (int s = 0; s < 2; ++s) {
                const Vector g = sys.force(stage_disp(x, s));
                for (std::size_t i = 0; i < n; ++i) r[2 * i + s] -= h * h * g[i];
            }
        return r;
    };
    JacobianFn jacobian = [&](std::span<const double> x) -> Factorization {
        if (!sys.has_force()) return ws.s_factor_;
        std::vector<Triplet> t = ws.s_.triplets();
        for (int s = 0; s < 2; ++s) {
            const SparseMatrix jg = sys.force_jacobian(stage_disp(x, s));
            for (const Triplet& e : jg.triplets())
                t.push_back({2 * e.row + s, 2 * e.col + s, -h * h * e.value});
        }
        return factorize(SparseMatrix::from_triplets(2 * n, 2 * n, t), FactorKind::General);
    };
    const NewtonResult sol = newton_solve(residual, jacobian, Vector(2 * n, 0.0), cfg, "Gauss4");
    ws.iters_ = sol.iterations;

    // u^{n+1} = u + h b^T W = u + (b^T D) Delta; w^{n+1} = w + (b^T D)(W - 1 w).
    const double bd[2] = {0.5 * (kD[0][0] + kD[1][0]), 0.5 * (kD[0][1] + kD[1][1])};
    Vector u1(u), w1(w);
    for (std::size_t i = 0; i < n; ++i) {
        const double d0 = sol.x[2 * i];
        const double d1 = sol.x[2 * i + 1];
        const double W0 = (kD[0][0] * d0 + kD[0][1] * d1) / h;
        const double W1 = (kD[1][0] * d0 + kD[1][1] * d1) / h;
        u1[i] += bd[0] * d0 + bd[1] * d1;
        w1[i] += bd[0] * (W0 - w[i]) + bd[1] * (W1 - w[i]);
    }
    return {state.t + h, std::move(u1), std::move(w1)};
}

State gauss4_step(const SecondOrderSystem& sys, const State& state, double h, const NewtonConfig& cfg)
{
    Gauss4Workspace ws(sys, h);
    return gauss4_step(sys, state, h, ws, cfg);
}

} // namespace strudyn
