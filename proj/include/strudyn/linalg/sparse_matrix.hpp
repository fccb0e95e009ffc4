#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "strudyn/linalg/dense_matrix.hpp"
#include "strudyn/linalg/vector_ops.hpp"

namespace strudyn {

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
};

/// Compressed-row sparse matrix. Column indices are strictly increasing
/// within each row; duplicates are summed at construction.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), offsets_(rows + 1, 0) {}

    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> entries);
    static SparseMatrix from_dense(const DenseMatrix& d, double drop_tol = 0.0);
    static SparseMatrix identity(std::size_t n);
    static SparseMatrix diagonal(std::span<const double> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return values_.size(); }
    bool square() const noexcept { return rows_ == cols_; }

    std::span<const std::size_t> offsets() const noexcept { return offsets_; }
    std::span<const std::size_t> columns() const noexcept { return columns_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Entry lookup by binary search; zero when not stored.
    double at(std::size_t i, std::size_t j) const;

    Vector apply(std::span<const double> x) const;
    void apply_add(std::span<const double> x, std::span<double> y, double alpha = 1.0) const;

    SparseMatrix transpose() const;
    DenseMatrix to_dense() const;
    bool is_finite() const;
    bool is_symmetric(double rel_tol = 1e-12) const;
    double max_abs() const;
    double max_row_norm() const;

    /// Restriction to the index set `keep` (rows and columns), in that order.
    SparseMatrix restrict_to(std::span<const std::size_t> keep) const;

    std::vector<Triplet> triplets() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::size_t> columns_;
    std::vector<double> values_;
};

/// a*A + b*B on the union sparsity pattern.
SparseMatrix linear_combination(double a, const SparseMatrix& A, double b, const SparseMatrix& B);

/// c0*M + c1*C + c2*K, the shape every implicit iteration matrix takes.
SparseMatrix combine3(double c0, const SparseMatrix& M, double c1, const SparseMatrix& C, double c2,
                      const SparseMatrix& K);

} // namespace strudyn
