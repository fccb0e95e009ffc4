#include "strudyn/linalg/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

namespace strudyn {

namespace detail {

struct FactorData {
    FactorKind kind = FactorKind::Spd;
    std::size_t n = 0;
    std::vector<std::size_t> perm; // perm[new] = old

    // Profile Cholesky: row i of L stored densely from column first[i] to i.
    std::vector<std::size_t> first;
    std::vector<std::size_t> row_start;
    std::vector<double> lvals;

    // Banded LU, LAPACK gbtrf layout: entry (i, j) at band[(kv + i - j) + j * ldab].
    std::size_t kl = 0;
    std::size_t ku = 0;
    std::size_t ldab = 0;
    std::vector<double> band;
    std::vector<std::size_t> pivots;

    double& l(std::size_t i, std::size_t j) { return lvals[row_start[i] + (j - first[i])]; }
    double l(std::size_t i, std::size_t j) const { return lvals[row_start[i] + (j - first[i])]; }

    double& b(std::size_t i, std::size_t j) { return band[(kl + ku + i - j) + j * ldab]; }
    double b(std::size_t i, std::size_t j) const { return band[(kl + ku + i - j) + j * ldab]; }
};

} // namespace detail

namespace {

std::vector<std::vector<std::size_t>> symmetric_adjacency(const SparseMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<std::vector<std::size_t>> adj(n);
    const auto off = a.offsets();
    const auto col = a.columns();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = off[i]; k < off[i + 1]; ++k) {
            const std::size_t j = col[k];
            if (j == i) continue;
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return adj;
}

// BFS returning the visit order and the last level, used to find a pseudo-peripheral start.
std::vector<std::size_t> bfs_levels(const std::vector<std::vector<std::size_t>>& adj, std::size_t start,
                                    std::vector<std::size_t>& level)
{
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue{start};
    level[start] = 0;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (std::size_t w : adj[v]) {
            if (level[w] == static_cast<std::size_t>(-1)) {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return order;
}

void check_input(const SparseMatrix& a, FactorKind hint)
{
    if (!a.square()) throw DimensionError("factorize: matrix is not square");
    if (!a.is_finite()) throw DomainError("factorize: non-finite entries");
    if (hint == FactorKind::Spd && !a.is_symmetric()) throw DomainError("factorize: non-symmetric input with spd hint");
}

std::shared_ptr<detail::FactorData> cholesky(const SparseMatrix& a, std::vector<std::size_t> perm)
{
    auto f = std::make_shared<detail::FactorData>();
    f->kind = FactorKind::Spd;
    f->n = a.rows();
    const std::size_t n = f->n;
    std::vector<std::size_t> inv(n);
    for (std::size_t k = 0; k < n; ++k) inv[perm[k]] = k;

    // Envelope of the lower triangle of P A P^T.
    f->first.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) f->first[i] = i;
    const auto off = a.offsets();
    const auto col = a.columns();
    const auto val = a.values();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = off[r]; k < off[r + 1]; ++k) {
            const std::size_t i = inv[r];
            const std::size_t j = inv[col[k]];
            if (j < i) f->first[i] = std::min(f->first[i], j);
        }
    f->row_start.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) f->row_start[i + 1] = f->row_start[i] + (i - f->first[i] + 1);
    f->lvals.assign(f->row_start[n], 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = off[r]; k < off[r + 1]; ++k) {
            const std::size_t i = inv[r];
            const std::size_t j = inv[col[k]];
            if (j <= i) f->l(i, j) += val[k];
        }

    const double floor = 1e-14 * a.max_row_norm();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t fi = f->first[i];
        double* li = &f->lvals[f->row_start[i]];
        for (std::size_t j = fi; j < i; ++j) {
            const std::size_t fj = f->first[j];
            const double* lj = &f->lvals[f->row_start[j]];
            const std::size_t k0 = std::max(fi, fj);
            double s = li[j - fi];
            for (std::size_t k = k0; k < j; ++k) s -= li[k - fi] * lj[k - fj];
            li[j - fi] = s / lj[j - fj];
        }
        double d = li[i - fi];
        for (std::size_t k = fi; k < i; ++k) d -= li[k - fi] * li[k - fi];
        if (!(d > floor)) {
            throw SingularMatrixError("factorize: matrix not positive definite (pivot " + std::to_string(d) +
                                      " at row " + std::to_string(perm[i]) + ")");
        }
        li[i - fi] = std::sqrt(d);
    }
    f->perm = std::move(perm);
    return f;
}

std::shared_ptr<detail::FactorData> banded_lu(const SparseMatrix& a, std::vector<std::size_t> perm)
{
    auto f = std::make_shared<detail::FactorData>();
    f->kind = FactorKind::General;
    f->n = a.rows();
    const std::size_t n = f->n;
    std::vector<std::size_t> inv(n);
    for (std::size_t k = 0; k < n; ++k) inv[perm[k]] = k;

    const auto off = a.offsets();
    const auto col = a.columns();
    const auto val = a.values();
    std::size_t kl = 0;
    std::size_t ku = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = off[r]; k < off[r + 1]; ++k) {
            const std::size_t i = inv[r];
            const std::size_t j = inv[col[k]];
            if (i > j) kl = std::max(kl, i - j);
            else ku = std::max(ku, j - i);
        }
    f->kl = kl;
    f->ku = ku;
    f->ldab = 2 * kl + ku + 1;
    f->band.assign(f->ldab * n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = off[r]; k < off[r + 1]; ++k) f->b(inv[r], inv[col[k]]) += val[k];

    const double floor = 1e-14 * a.max_row_norm();
    f->pivots.assign(n, 0);
    const std::size_t kv = kl + ku;
    std::size_t ju = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t km = std::min(kl, n - 1 - j);
        std::size_t jp = 0;
        double best = std::abs(f->b(j, j));
        for (std::size_t p = 1; p <= km; ++p) {
            const double v = std::abs(f->b(j + p, j));
            if (v > best) {
                best = v;
                jp = p;
            }
        }
        if (!(best > floor)) {
            throw SingularMatrixError("factorize: pivot below threshold at column " + std::to_string(perm[j]));
        }
        f->pivots[j] = j + jp;
        ju = std::max(ju, std::min(j + ku + jp, n - 1));
        if (jp != 0) {
            for (std::size_t c = j; c <= ju; ++c) std::swap(f->b(j, c), f->b(j + jp, c));
        }
        const double piv = f->b(j, j);
        for (std::size_t p = 1; p <= km; ++p) f->b(j + p, j) /= piv;
        for (std::size_t c = j + 1; c <= ju; ++c) {
            const double u = f->b(j, c);
            if (u == 0.0) continue;
            double* colc = &f->band[c * f->ldab];
            const double* colj = &f->band[j * f->ldab];
            for (std::size_t p = 1; p <= km; ++p) colc[kv + j + p - c] -= colj[kv + p] * u;
        }
    }
    f->perm = std::move(perm);
    return f;
}

} // namespace

std::vector<std::size_t> reverse_cuthill_mckee(const SparseMatrix& a)
{
    const std::size_t n = a.rows();
    const auto adj = symmetric_adjacency(a);
    constexpr auto unseen = static_cast<std::size_t>(-1);
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<std::size_t> level(n, unseen);

    for (std::size_t seed = 0; seed < n; ++seed) {
        if (placed[seed]) continue;
        // Minimum-degree node of this component, then two BFS sweeps toward the periphery.
        std::fill(level.begin(), level.end(), unseen);
        auto comp = bfs_levels(adj, seed, level);
        std::size_t start = *std::min_element(comp.begin(), comp.end(), [&](std::size_t x, std::size_t y) {
            return adj[x].size() < adj[y].size() || (adj[x].size() == adj[y].size() && x < y);
        });
        for (int sweep = 0; sweep < 2; ++sweep) {
            for (std::size_t v : comp) level[v] = unseen;
            auto o = bfs_levels(adj, start, level);
            const std::size_t far = level[o.back()];
            std::size_t cand = o.back();
            for (std::size_t v : o)
                if (level[v] == far && adj[v].size() < adj[cand].size()) cand = v;
            start = cand;
        }

        std::deque<std::size_t> queue{start};
        placed[start] = true;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            order.push_back(v);
            std::vector<std::size_t> nb;
            for (std::size_t w : adj[v])
                if (!placed[w]) nb.push_back(w);
            std::sort(nb.begin(), nb.end(), [&](std::size_t x, std::size_t y) {
                return adj[x].size() < adj[y].size() || (adj[x].size() == adj[y].size() && x < y);
            });
            for (std::size_t w : nb) {
                placed[w] = true;
                queue.push_back(w);
            }
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

Factorization factorize(const SparseMatrix& a, FactorKind hint)
{
    check_input(a, hint);
    auto perm = reverse_cuthill_mckee(a);
    if (hint == FactorKind::Spd) return Factorization(cholesky(a, std::move(perm)));
    return Factorization(banded_lu(a, std::move(perm)));
}

Factorization factorize(const DenseMatrix& a, FactorKind hint)
{
    if (!a.square()) throw DimensionError("factorize: matrix is not square");
    return factorize(SparseMatrix::from_dense(a), hint);
}

FactorKind Factorization::kind() const
{
    if (!data_) throw Error("Factorization: empty");
    return data_->kind;
}

std::size_t Factorization::size() const { return data_ ? data_->n : 0; }

Vector Factorization::solve(std::span<const double> rhs) const
{
    if (!data_) throw Error("Factorization: empty");
    const auto& f = *data_;
    const std::size_t n = f.n;
    require_same_size(rhs.size(), n, "Factorization::solve");
    Vector y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = rhs[f.perm[k]];

    if (f.kind == FactorKind::Spd) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t fi = f.first[i];
            const double* li = &f.lvals[f.row_start[i]];
            double s = y[i];
            for (std::size_t k = fi; k < i; ++k) s -= li[k - fi] * y[k];
            y[i] = s / li[i - fi];
        }
        for (std::size_t i = n; i-- > 0;) {
            const std::size_t fi = f.first[i];
            const double* li = &f.lvals[f.row_start[i]];
            y[i] /= li[i - fi];
            const double yi = y[i];
            for (std::size_t k = fi; k < i; ++k) y[k] -= li[k - fi] * yi;
        }
    } else {
        const std::size_t kv = f.kl + f.ku;
        for (std::size_t j = 0; j < n; ++j) {
            if (f.pivots[j] != j) std::swap(y[j], y[f.pivots[j]]);
            const std::size_t km = std::min(f.kl, n - 1 - j);
            const double yj = y[j];
            for (std::size_t p = 1; p <= km; ++p) y[j + p] -= f.b(j + p, j) * yj;
        }
        for (std::size_t j = n; j-- > 0;) {
            y[j] /= f.b(j, j);
            const double yj = y[j];
            const std::size_t i0 = j >= kv ? j - kv : 0;
            for (std::size_t i = i0; i < j; ++i) y[i] -= f.b(i, j) * yj;
        }
    }

    Vector x(n);
    for (std::size_t k = 0; k < n; ++k) x[f.perm[k]] = y[k];
    return x;
}

} // namespace strudyn
