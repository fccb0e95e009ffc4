#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "strudyn/linalg/dense_matrix.hpp"
#include "strudyn/linalg/sparse_matrix.hpp"

namespace strudyn {

enum class FactorKind { Spd, General };

namespace detail {
struct FactorData;
}

/// Immutable, cheaply copyable direct factorization.
///
/// Both kinds reorder with reverse Cuthill-McKee first. The SPD path is a
/// profile (skyline) Cholesky, the general path a banded LU with partial
/// pivoting. A pivot whose magnitude falls below 1e-14 times the largest
/// absolute row sum of the input is reported as singular.
class Factorization {
public:
    Factorization() = default;

    FactorKind kind() const;
    std::size_t size() const;
    bool empty() const noexcept { return !data_; }

    Vector solve(std::span<const double> b) const;

private:
    explicit Factorization(std::shared_ptr<const detail::FactorData> d) : data_(std::move(d)) {}
    friend Factorization factorize(const SparseMatrix& a, FactorKind hint);

    std::shared_ptr<const detail::FactorData> data_;
};

Factorization factorize(const SparseMatrix& a, FactorKind hint);
Factorization factorize(const DenseMatrix& a, FactorKind hint);

inline Vector solve(const Factorization& f, std::span<const double> b) { return f.solve(b); }

/// Reverse Cuthill-McKee ordering of the symmetrized pattern; perm[new] = old.
std::vector<std::size_t> reverse_cuthill_mckee(const SparseMatrix& a);

} // namespace strudyn
