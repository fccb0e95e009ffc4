#include "strudyn/linalg/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace strudyn {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> entries)
{
    SparseMatrix m(rows, cols);
    std::vector<std::size_t> count(rows + 1, 0);
    for (const auto& t : entries) {
        if (t.row >= rows || t.col >= cols) throw DimensionError("from_triplets: index out of range");
        ++count[t.row + 1];
    }
    for (std::size_t i = 0; i < rows; ++i) count[i + 1] += count[i];

    // Bucket by row, then sort and merge duplicates within each row.
    std::vector<std::size_t> pos(count.begin(), count.end() - 1);
    std::vector<std::pair<std::size_t, double>> buf(entries.size());
    for (const auto& t : entries) buf[pos[t.row]++] = {t.col, t.value};

    m.columns_.reserve(entries.size());
    m.values_.reserve(entries.size());
    for (std::size_t i = 0; i < rows; ++i) {
        auto first = buf.begin() + static_cast<std::ptrdiff_t>(count[i]);
        auto last = buf.begin() + static_cast<std::ptrdiff_t>(count[i + 1]);
        std::sort(first, last, [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto it = first; it != last; ++it) {
            if (!m.columns_.empty() && m.columns_.size() > m.offsets_[i] && m.columns_.back() == it->first) {
                m.values_.back() += it->second;
            } else {
                m.columns_.push_back(it->first);
                m.values_.push_back(it->second);
            }
        }
        m.offsets_[i + 1] = m.columns_.size();
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& d, double drop_tol)
{
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (std::abs(d(i, j)) > drop_tol || i == j) t.push_back({i, j, d(i, j)});
    return from_triplets(d.rows(), d.cols(), t);
}

SparseMatrix SparseMatrix::identity(std::size_t n)
{
    std::vector<double> ones(n, 1.0);
    return diagonal(ones);
}

SparseMatrix SparseMatrix::diagonal(std::span<const double> d)
{
    std::vector<Triplet> t;
    t.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) t.push_back({i, i, d[i]});
    return from_triplets(d.size(), d.size(), t);
}

double SparseMatrix::at(std::size_t i, std::size_t j) const
{
    const auto first = columns_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
    const auto last = columns_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
    const auto it = std::lower_bound(first, last, j);
    if (it == last || *it != j) return 0.0;
    return values_[static_cast<std::size_t>(it - columns_.begin())];
}

Vector SparseMatrix::apply(std::span<const double> x) const
{
    Vector y(rows_, 0.0);
    apply_add(x, y);
    return y;
}

void SparseMatrix::apply_add(std::span<const double> x, std::span<double> y, double alpha) const
{
    require_same_size(x.size(), cols_, "SparseMatrix::apply (x)");
    require_same_size(y.size(), rows_, "SparseMatrix::apply (y)");
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) s += values_[k] * x[columns_[k]];
        y[i] += alpha * s;
    }
}

SparseMatrix SparseMatrix::transpose() const
{
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) t.push_back({columns_[k], i, values_[k]});
    return from_triplets(cols_, rows_, t);
}

DenseMatrix SparseMatrix::to_dense() const
{
    DenseMatrix d(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) d(i, columns_[k]) += values_[k];
    return d;
}

bool SparseMatrix::is_finite() const { return all_finite(values_); }

bool SparseMatrix::is_symmetric(double rel_tol) const
{
    if (!square()) return false;
    const double tol = rel_tol * std::max(1.0, max_abs());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k)
            if (std::abs(values_[k] - at(columns_[k], i)) > tol) return false;
    return true;
}

double SparseMatrix::max_abs() const { return norm_inf(values_); }

double SparseMatrix::max_row_norm() const
{
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) s += std::abs(values_[k]);
        m = std::max(m, s);
    }
    return m;
}

SparseMatrix SparseMatrix::restrict_to(std::span<const std::size_t> keep) const
{
    constexpr auto absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(std::max(rows_, cols_), absent);
    for (std::size_t a = 0; a < keep.size(); ++a) {
        if (keep[a] >= map.size()) throw DimensionError("restrict_to: index out of range");
        map[keep[a]] = a;
    }
    std::vector<Triplet> t;
    for (std::size_t a = 0; a < keep.size(); ++a) {
        const std::size_t i = keep[a];
        for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) {
            const std::size_t b = map[columns_[k]];
            if (b != absent) t.push_back({a, b, values_[k]});
        }
    }
    return from_triplets(keep.size(), keep.size(), t);
}

std::vector<Triplet> SparseMatrix::triplets() const
{
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) t.push_back({i, columns_[k], values_[k]});
    return t;
}

SparseMatrix linear_combination(double a, const SparseMatrix& A, double b, const SparseMatrix& B)
{
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionError("linear_combination: shape mismatch");
    std::vector<Triplet> t;
    t.reserve(A.nnz() + B.nnz());
    for (auto e : A.triplets()) t.push_back({e.row, e.col, a * e.value});
    for (auto e : B.triplets()) t.push_back({e.row, e.col, b * e.value});
    return SparseMatrix::from_triplets(A.rows(), A.cols(), t);
}

SparseMatrix combine3(double c0, const SparseMatrix& M, double c1, const SparseMatrix& C, double c2,
                      const SparseMatrix& K)
{
    return linear_combination(1.0, linear_combination(c0, M, c1, C), c2, K);
}

} // namespace strudyn
