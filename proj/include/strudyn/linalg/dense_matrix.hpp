#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "strudyn/linalg/vector_ops.hpp"

namespace strudyn {

/// Row-major dense matrix. Used for the small evolution operators and for
/// the modal oracle, never for anything mesh-sized.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const double> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> data() const noexcept { return data_; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    DenseMatrix transpose() const;
    Vector apply(std::span<const double> x) const;
    bool is_finite() const;
    bool is_symmetric(double rel_tol = 1e-12) const;
    double max_abs() const;
    double max_row_norm() const; // infinity norm

    DenseMatrix& operator+=(const DenseMatrix& o);
    DenseMatrix& operator-=(const DenseMatrix& o);
    DenseMatrix& operator*=(double s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(double s, DenseMatrix a);

/// Inverse by partially pivoted elimination. Throws SingularMatrixError.
DenseMatrix inverse(const DenseMatrix& a);

/// Largest absolute entrywise difference.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

} // namespace strudyn
