#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "strudyn/analysis/norms.hpp"
#include "strudyn/analysis/report.hpp"
#include "test_support.hpp"

using namespace strudyn;
using namespace strudyn::testing;

namespace {

std::vector<Vector> random_levels(std::size_t levels, std::size_t n)
{
    std::vector<Vector> e;
    for (std::size_t i = 0; i < levels; ++i) e.push_back(random_vector(n));
    return e;
}

double quad(const SparseMatrix& A, const Vector& x) { return dot(x, A.apply(x)); }

} // namespace

TEST(Norms, SingleLevelExample)
{
    // e = [1], M = [1/3]: sqrt(1/3).
    const SparseMatrix M = SparseMatrix::diagonal(Vector{1.0 / 3});
    EXPECT_NEAR(linf_l2({Vector{1.0}}, M), std::sqrt(1.0 / 3), 1e-15);
    EXPECT_NEAR(linf_linf({Vector{-1.0}}), 1.0, 0.0);
}

TEST(Norms, EmpiricalRate)
{
    EXPECT_NEAR(empirical_rate(1.26e-2, 2.78e-3, 0.1, 0.05), std::log(1.26e-2 / 2.78e-3) / std::log(2.0), 1e-12);
    EXPECT_NEAR(empirical_rate(1.26e-2, 2.78e-3, 0.1, 0.05), 2.18, 5e-3);
    EXPECT_NEAR(empirical_rate(1.0, 0.5, 1.0, 0.5), 1.0, 1e-15);
    EXPECT_NEAR(empirical_rate(1.0, 0.25, 1.0, 0.5), 2.0, 1e-15);
    EXPECT_THROW(empirical_rate(0.0, 1.0, 1.0, 0.5), DomainError);
    EXPECT_THROW(empirical_rate(1.0, 1.0, 0.5, 0.5), DomainError);
}

TEST(Norms, ConstantError)
{
    // e_n = c for N + 1 levels: L2(H1) = |c| sqrt((m + k) (N + 1) dt).
    const SparseMatrix M = SparseMatrix::diagonal(Vector{2.0});
    const SparseMatrix K = SparseMatrix::diagonal(Vector{3.0});
    const std::vector<Vector> e(11, Vector{0.5});
    EXPECT_NEAR(linf_l2(e, M), 0.5 * std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(l2_h1(e, M, K, 0.1), 0.5 * std::sqrt(5.0 * 11 * 0.1), 1e-14);
    EXPECT_EQ(linf_linf(e), 0.5);
    EXPECT_EQ(l2_h1(std::vector<Vector>(3, Vector{0.0}), M, K, 0.1), 0.0);
}

TEST(Norms, LinfLinfSpike)
{
    std::vector<Vector> e(20, Vector(7, 0.1));
    e[13][4] = -3.0;
    EXPECT_EQ(linf_linf(e), 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto r = random_levels(9, 6);
        double want = 0.0;
        for (const auto& v : r)
            for (double x : v) want = std::max(want, std::abs(x));
        EXPECT_EQ(linf_linf(r), want);
    }
}

TEST(Norms, HomogeneityAndSign)
{
    const SparseMatrix M = SparseMatrix::from_dense(random_spd(6));
    const SparseMatrix K = SparseMatrix::from_dense(random_spd(6));
    for (int trial = 0; trial < 10; ++trial) {
        const auto e = random_levels(5, 6);
        const double c = uniform(-4.0, 4.0);
        std::vector<Vector> ce, neg;
        for (const auto& v : e) {
            ce.push_back(scaled(c, v));
            neg.push_back(scaled(-1.0, v));
        }
        EXPECT_NEAR(linf_l2(ce, M), std::abs(c) * linf_l2(e, M), 1e-12 * linf_l2(ce, M));
        EXPECT_NEAR(l2_h1(ce, M, K, 0.01), std::abs(c) * l2_h1(e, M, K, 0.01), 1e-12 * l2_h1(ce, M, K, 0.01));
        EXPECT_NEAR(linf_linf(ce), std::abs(c) * linf_linf(e), 1e-14 * linf_linf(ce));
        EXPECT_EQ(linf_l2(neg, M), linf_l2(e, M));
        EXPECT_EQ(linf_linf(neg), linf_linf(e));
    }
}

TEST(Norms, L2H1BoundedByLinfEnergy)
{
    const SparseMatrix M = SparseMatrix::from_dense(random_spd(5));
    const SparseMatrix K = SparseMatrix::from_dense(random_spd(5));
    const double dt = 0.05;
    const auto e = random_levels(12, 5);
    double peak = 0.0;
    for (const auto& v : e) peak = std::max(peak, quad(M, v) + quad(K, v));
    EXPECT_LE(l2_h1(e, M, K, dt), std::sqrt(peak * e.size() * dt) * (1 + 1e-14));
    EXPECT_LE(linf_l2(e, M), std::sqrt(peak) * (1 + 1e-14));
}

TEST(NormAccumulator, MatchesBatch)
{
    const SparseMatrix M = SparseMatrix::from_dense(random_spd(4));
    const SparseMatrix K = SparseMatrix::from_dense(random_spd(4));
    const double dt = 0.02;
    const auto e = random_levels(30, 4);
    NormAccumulator acc(M, K, dt);
    for (const auto& v : e) acc.add(v);
    EXPECT_EQ(acc.levels(), 30u);
    EXPECT_NEAR(acc.linf_l2(), linf_l2(e, M), 1e-14);
    EXPECT_NEAR(acc.l2_h1(), l2_h1(e, M, K, dt), 1e-13);
    EXPECT_EQ(acc.linf_linf(), linf_linf(e));

    NormAccumulator skip(M, K, dt);
    skip.add(e[0], false);
    for (std::size_t i = 1; i < e.size(); ++i) skip.add(e[i]);
    const std::vector<Vector> tail(e.begin() + 1, e.end());
    EXPECT_NEAR(skip.l2_h1(), l2_h1(tail, M, K, dt), 1e-13);
    EXPECT_NEAR(skip.linf_l2(), linf_l2(e, M), 1e-14);
}

TEST(SeriesAccumulator, Values)
{
    SeriesAccumulator s(0.5);
    s.add(3.0, false);
    s.add(-1.0);
    s.add(2.0);
    EXPECT_NEAR(s.l2(), std::sqrt(0.5 * 5.0), 1e-15);
    EXPECT_EQ(s.linf(), 3.0);
}

TEST(Report, Formatting)
{
    EXPECT_EQ(three_digits(0.012345), "0.0123");
    EXPECT_EQ(three_digits(1.78e-4), "0.000178");
    EXPECT_EQ(full_precision(0.1), "0.10000000000000001");
    Table t;
    t.header = {"method", "err"};
    t.add_row({"TR-BDF2", "7.12e-04"});
    t.add_row({"BDF2", "2.18e-02"});
    EXPECT_EQ(t.csv(), "method,err\nTR-BDF2,7.12e-04\nBDF2,2.18e-02\n");
    std::istringstream lines(t.aligned());
    std::string a, b;
    std::getline(lines, a);
    std::getline(lines, b);
    EXPECT_EQ(a.find("err"), b.find("7.12e-04"));
    EXPECT_THROW(t.add_row({"x"}), DimensionError);
}

TEST(Report, AtomicWrite)
{
    const auto dir = std::filesystem::temp_directory_path() / "strudyn_report_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "out.csv";
    write_file_atomic(file, "a,b\n1,2\n");
    write_file_atomic(file, "a,b\n3,4\n");
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "a,b\n3,4\n");
    write_file_atomic(dir / "nested" / "x.csv", "x");
    EXPECT_TRUE(std::filesystem::exists(dir / "nested" / "x.csv"));
    EXPECT_THROW(write_file_atomic(file / "x.csv", "x"), IoError);
    std::filesystem::remove_all(dir);
}
