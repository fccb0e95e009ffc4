#include "strudyn/analysis/norms.hpp"

#include <cmath>

#include "strudyn/errors.hpp"

namespace strudyn {

namespace {

double quad(const SparseMatrix& A, std::span<const double> e)
{
    require_same_size(A.rows(), e.size(), "norm");
    return dot(e, A.apply(e));
}

} // namespace

double linf_l2(const std::vector<Vector>& errors, const SparseMatrix& M)
{
    double m = 0.0;
    for (const Vector& e : errors) m = std::max(m, std::sqrt(std::max(0.0, quad(M, e))));
    return m;
}

double l2_h1(const std::vector<Vector>& errors, const SparseMatrix& M, const SparseMatrix& K, double dt)
{
    if (!(dt > 0.0)) throw DomainError("l2_h1: dt must be positive");
    double s = 0.0;
    for (const Vector& e : errors) s += (quad(M, e) + quad(K, e)) * dt;
    return std::sqrt(std::max(0.0, s));
}

double linf_linf(const std::vector<Vector>& errors)
{
    double m = 0.0;
    for (const Vector& e : errors) m = std::max(m, norm_inf(e));
    return m;
}

double empirical_rate(double err1, double err2, double dt1, double dt2)
{
    if (!(err1 > 0.0) || !(err2 > 0.0)) throw DomainError("empirical_rate: errors must be positive");
    if (!(dt1 > 0.0) || !(dt2 > 0.0) || dt1 == dt2) throw DomainError("empirical_rate: steps must differ");
    return std::log(err2 / err1) / std::log(dt2 / dt1);
}

NormAccumulator::NormAccumulator(const SparseMatrix& M, const SparseMatrix& K, double dt) : M_(&M), K_(&K), dt_(dt)
{
    if (!(dt > 0.0)) throw DomainError("NormAccumulator: dt must be positive");
    if (M.rows() != K.rows()) throw DimensionError("NormAccumulator: M and K differ in size");
}

void NormAccumulator::add(std::span<const double> e, bool in_sum)
{
    const double m = std::max(0.0, quad(*M_, e));
    linf_l2_ = std::max(linf_l2_, std::sqrt(m));
    linf_linf_ = std::max(linf_linf_, norm_inf(e));
    if (in_sum) sum_h1_ += (m + quad(*K_, e)) * dt_;
    ++levels_;
}

double NormAccumulator::l2_h1() const { return std::sqrt(std::max(0.0, sum_h1_)); }

void SeriesAccumulator::add(double e, bool in_sum)
{
    linf_ = std::max(linf_, std::abs(e));
    if (in_sum) sum_ += e * e * dt_;
}

double SeriesAccumulator::l2() const { return std::sqrt(sum_); }

} // namespace strudyn
