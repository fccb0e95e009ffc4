#pragma once

#include <span>
#include <string>
#include <vector>

#include "strudyn/linalg/sparse_matrix.hpp"

namespace strudyn {

/// max_n sqrt(e_n^T M e_n).
double linf_l2(const std::vector<Vector>& errors, const SparseMatrix& M);

/// sqrt(sum_n e_n^T (M + K) e_n dt) over every level passed in.
double l2_h1(const std::vector<Vector>& errors, const SparseMatrix& M, const SparseMatrix& K, double dt);

/// max over levels and entries of |e|.
double linf_linf(const std::vector<Vector>& errors);

/// log(err2 / err1) / log(dt2 / dt1). Throws DomainError when an error is
/// not positive or the steps coincide.
double empirical_rate(double err1, double err2, double dt1, double dt2);

/// Streaming form of the three space-time norms, so trajectories need not
/// be stored. Levels passed with in_sum = false (the initial level) count
/// for the maxima only.
class NormAccumulator {
public:
    NormAccumulator(const SparseMatrix& M, const SparseMatrix& K, double dt);

    void add(std::span<const double> e, bool in_sum = true);

    double linf_l2() const noexcept { return linf_l2_; }
    double l2_h1() const;
    double linf_linf() const noexcept { return linf_linf_; }
    std::size_t levels() const noexcept { return levels_; }

private:
    const SparseMatrix* M_;
    const SparseMatrix* K_;
    double dt_;
    double linf_l2_ = 0.0;
    double sum_h1_ = 0.0;
    double linf_linf_ = 0.0;
    std::size_t levels_ = 0;
};

/// sqrt(sum_n e_n^2 dt) and max_n |e_n| of one scalar time series.
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(double dt) : dt_(dt) {}
    void add(double e, bool in_sum = true);
    double l2() const;
    double linf() const noexcept { return linf_; }

private:
    double dt_;
    double sum_ = 0.0;
    double linf_ = 0.0;
};

} // namespace strudyn
