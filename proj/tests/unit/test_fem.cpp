#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "strudyn/fem/assembly.hpp"
#include "strudyn/fem/mesh.hpp"
#include "strudyn/linalg/eigen.hpp"
#include "strudyn/linalg/factorization.hpp"
#include "test_support.hpp"

using namespace strudyn;
using namespace strudyn::testing;

namespace {

CoefficientField uniform_field(double rho, double lambda, double mu, double E = 1.0)
{
    CoefficientField c;
    c.regions[0] = RegionCoefficients{rho, E, lambda, mu};
    return c;
}

Mesh single_triangle()
{
    Mesh m;
    m.dim = 2;
    m.nodes = {Point{0, 0}, Point{1, 0}, Point{0, 1}};
    m.elements = {{0, 1, 2}};
    m.tags = {0};
    return m;
}

double total_measure(const Mesh& m)
{
    double s = 0.0;
    for (std::size_t e = 0; e < m.element_count(); ++e) s += m.measure(e);
    return s;
}

// Constant-strain triangle stiffness from B^T D B, strain ordered
// (exx, eyy, 2 exy) and dofs interleaved per node.
DenseMatrix cst_stiffness(const Mesh& m, std::size_t e, double lambda, double mu)
{
    const auto& el = m.elements[e];
    const Point a = m.nodes[el[0]], b = m.nodes[el[1]], c = m.nodes[el[2]];
    const double area2 = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
    const double gx[3] = {(b[1] - c[1]) / area2, (c[1] - a[1]) / area2, (a[1] - b[1]) / area2};
    const double gy[3] = {(c[0] - b[0]) / area2, (a[0] - c[0]) / area2, (b[0] - a[0]) / area2};
    DenseMatrix B(3, 6);
    for (int i = 0; i < 3; ++i) {
        B(0, 2 * i) = gx[i];
        B(1, 2 * i + 1) = gy[i];
        B(2, 2 * i) = gy[i];
        B(2, 2 * i + 1) = gx[i];
    }
    const DenseMatrix D{{lambda + 2 * mu, lambda, 0}, {lambda, lambda + 2 * mu, 0}, {0, 0, mu}};
    DenseMatrix K(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            double s = 0.0;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q) s += B(p, i) * D(p, q) * B(q, j);
            K(i, j) = 0.5 * area2 * s;
        }
    return K;
}

} // namespace

TEST(IntervalMesh, Examples)
{
    const std::vector<double> bp{0.5, 10.0};
    const Mesh m = generate_interval_mesh(10.5, 22, bp);
    EXPECT_EQ(m.dim, 1);
    EXPECT_EQ(m.node_count(), 22u);
    EXPECT_EQ(m.element_count(), 21u);
    for (std::size_t e = 0; e < m.element_count(); ++e) EXPECT_NEAR(m.measure(e), 0.5, 1e-14);
    EXPECT_EQ(m.tags.front(), 0);
    EXPECT_EQ(m.tags[1], 1);
    EXPECT_EQ(m.tags.back(), 2);
    EXPECT_EQ(std::set<int>(m.tags.begin(), m.tags.end()).size(), 3u);
    EXPECT_EQ(m.boundary.size(), 2u);
    EXPECT_NEAR(total_measure(m), 10.5, 1e-12);
    EXPECT_NEAR(generate_interval_mesh(10.5, 21).measure(0), 0.525, 1e-14);
}

TEST(RodAssembly, OneElement)
{
    const auto p = assemble_rod(generate_interval_mesh(1.0, 2), uniform_field(1.0, 0.0, 1.0));
    ASSERT_EQ(p.size(), 1u);
    EXPECT_NEAR(p.M.at(0, 0), 1.0 / 3, 1e-15);
    EXPECT_NEAR(p.K.at(0, 0), 1.0, 1e-15);
}

TEST(RodAssembly, TwoElements)
{
    const auto p = assemble_rod(generate_interval_mesh(1.0, 3), uniform_field(1.0, 0.0, 1.0));
    const DenseMatrix K{{4, -2}, {-2, 2}};
    const DenseMatrix M{{1.0 / 3, 1.0 / 12}, {1.0 / 12, 1.0 / 6}};
    EXPECT_LT(max_abs_diff(p.K.to_dense(), K), 1e-14);
    EXPECT_LT(max_abs_diff(p.M.to_dense(), M), 1e-15);
    EXPECT_EQ(p.free_dofs, (std::vector<std::size_t>{1, 2}));
}

TEST(RodAssembly, RegionCoefficients)
{
    const std::vector<double> bp{0.5};
    CoefficientField c;
    c.regions[0] = RegionCoefficients{1.0, 1.0};
    c.regions[1] = RegionCoefficients{2.0, 3.0};
    const auto p = assemble_rod(generate_interval_mesh(1.0, 3, bp), c);
    // Element 2 (l = 0.5) has E = 3, rho = 2.
    EXPECT_NEAR(p.K.at(1, 1), 3.0 / 0.5, 1e-14);
    EXPECT_NEAR(p.M.at(1, 1), 2.0 * 0.5 / 3, 1e-15);
    EXPECT_NEAR(p.K.at(0, 0), 2.0 + 6.0, 1e-14);
}

TEST(RodAssembly, PositiveDefinite)
{
    const auto p = assemble_rod(generate_interval_mesh(1.0, 21), uniform_field(1.0, 0.0, 1.0));
    EXPECT_GT(smallest_generalized_eigenvalue(p.K, p.M), 0.0);
    // Clamped-free rod: lowest eigenvalue (pi / 2)^2.
    EXPECT_NEAR(smallest_generalized_eigenvalue(p.K, p.M), std::pow(std::numbers::pi / 2, 2), 1e-2);
    EXPECT_THROW(assemble_rod(generate_interval_mesh(1.0, 5), CoefficientField{}), DomainError);
}

TEST(SquareMesh, CountsAndArea)
{
    for (auto pattern : {DiagonalPattern::Uniform, DiagonalPattern::Alternating}) {
        const Mesh m = generate_square_mesh(2.0, 5, pattern);
        EXPECT_EQ(m.node_count(), 36u);
        EXPECT_EQ(m.element_count(), 50u);
        EXPECT_EQ(m.boundary.size(), 20u);
        EXPECT_NEAR(total_measure(m), 4.0, 1e-12);
        for (std::size_t e = 0; e < m.element_count(); ++e) {
            EXPECT_GT(m.measure(e), 0.0);
            EXPECT_NEAR(m.diameter(e), std::sqrt(2.0) * 0.4, 1e-14);
        }
        EXPECT_NO_THROW(m.validate());
    }
    EXPECT_EQ(square_cells_for_diameter(1.0, 0.1), 15u);
    EXPECT_EQ(square_cells_for_side(1.0, 0.1), 10u);
}

TEST(P1Elements, UnitRightTriangle)
{
    const Mesh m = single_triangle();
    const auto k = p1_stiffness_element(m, 0, 1.0);
    const double want[3][3] = {{1.0, -0.5, -0.5}, {-0.5, 0.5, 0.0}, {-0.5, 0.0, 0.5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(k[i][j], want[i][j], 1e-15);
    const auto mm = p1_mass_element(m, 0, 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(mm[i][j], (i == j ? 2.0 : 1.0) / 24, 1e-15);
}

TEST(P1Elements, ConstantsInKernel)
{
    const Mesh m = generate_square_mesh(1.0, 7, DiagonalPattern::Alternating);
    const Vector r = assemble_full_scalar_stiffness(m, 2.5).apply(Vector(m.node_count(), 1.0));
    for (double v : r) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(ScalarWave, LowestDirichletEigenvalue)
{
    const auto p = assemble_scalar_wave(generate_square_mesh(1.0, 32), 1.0);
    EXPECT_EQ(p.size(), 31u * 31u);
    const double pi = std::numbers::pi;
    EXPECT_NEAR(smallest_generalized_eigenvalue(p.K, p.M), 2 * pi * pi, 0.02 * 2 * pi * pi);
}

TEST(ScalarWave, MassIsSpd)
{
    const auto p = assemble_scalar_wave(generate_square_mesh(1.0, 6), 1.0);
    EXPECT_TRUE(p.M.is_symmetric());
    EXPECT_TRUE(p.K.is_symmetric());
    EXPECT_NO_THROW(factorize(p.M, FactorKind::Spd));
    for (int i = 0; i < 20; ++i) {
        const Vector x = random_vector(p.size());
        EXPECT_GT(dot(x, p.M.apply(x)), 0.0);
    }
}

TEST(InclusionMesh, Structure)
{
    const InclusionMeshSpec spec;
    const Mesh m = generate_inclusion_mesh(spec);
    EXPECT_NO_THROW(m.validate());
    EXPECT_NEAR(total_measure(m), 9.0, 1e-10);
    const std::set<int> tags(m.tags.begin(), m.tags.end());
    EXPECT_EQ(tags, (std::set<int>{0, 1, 2}));
    bool center = false;
    for (const auto& n : m.nodes) center = center || (std::abs(n[0] - 1.65) < 1e-12 && std::abs(n[1] - 1.65) < 1e-12);
    EXPECT_TRUE(center);
    double max_fine = 0.0, max_all = 0.0;
    for (std::size_t e = 0; e < m.element_count(); ++e) {
        const Point c = m.centroid(e);
        const double r = std::hypot(c[0] - 1.65, c[1] - 1.65);
        if (m.tags[e] == 2) {
            EXPECT_LT(r, spec.r_zone2);
            EXPECT_GE(r, spec.r_zone1);
        }
        if (m.tags[e] == 1) { EXPECT_LT(r, spec.r_zone1); }
        if (m.tags[e] == 0) { EXPECT_GE(r, spec.r_zone2); }
        if (r < spec.r_zone2) max_fine = std::max(max_fine, m.diameter(e));
        max_all = std::max(max_all, m.diameter(e));
    }
    EXPECT_LE(max_fine, spec.h_fine + 1e-12);
    EXPECT_LE(max_all, spec.h_coarse + 1e-12);
}

TEST(InclusionMesh, GradedAxis)
{
    const auto x = graded_axis(3.0, 1.65, 0.1, 0.024, 0.22, 1.25);
    EXPECT_EQ(x.front(), 0.0);
    EXPECT_NEAR(x.back(), 3.0, 1e-14);
    EXPECT_TRUE(std::is_sorted(x.begin(), x.end()));
    EXPECT_NE(std::find_if(x.begin(), x.end(), [](double v) { return std::abs(v - 1.65) < 1e-12; }), x.end());
}

TEST(Elasticity, OneElementMatchesCst)
{
    const Mesh m = single_triangle();
    const auto k = elasticity_element(m, 0, 2.0, 0.7);
    const DenseMatrix want = cst_stiffness(m, 0, 2.0, 0.7);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) EXPECT_NEAR(k[i][j], want(i, j), 1e-14);
}

TEST(Elasticity, MatchesCstOnDistortedTriangles)
{
    Mesh m = generate_square_mesh(1.0, 3, DiagonalPattern::Alternating);
    for (auto& n : m.nodes) n = Point{n[0] + 0.1 * n[1] * n[1], n[1] + 0.05 * n[0]};
    for (std::size_t e = 0; e < m.element_count(); ++e) {
        const auto k = elasticity_element(m, e, 1.3, 0.4);
        const DenseMatrix want = cst_stiffness(m, e, 1.3, 0.4);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) ASSERT_NEAR(k[i][j], want(i, j), 1e-12);
    }
}

TEST(Elasticity, RigidModesInKernel)
{
    const Mesh m = generate_inclusion_mesh(InclusionMeshSpec{.h_fine = 0.1, .h_coarse = 0.5});
    CoefficientField c;
    c.regions[0] = RegionCoefficients{1.0, 1.0, 2.0, 1.0};
    c.regions[1] = RegionCoefficients{5.0, 1.0, 200.0, 100.0};
    c.regions[2] = RegionCoefficients{3.0, 1.0, 20.0, 10.0};
    const SparseMatrix K = assemble_full_elasticity_stiffness(m, c);
    const std::size_t n = m.node_count();
    Vector tx(2 * n), ty(2 * n), rot(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        tx[2 * i] = 1.0;
        ty[2 * i + 1] = 1.0;
        rot[2 * i] = -m.nodes[i][1];
        rot[2 * i + 1] = m.nodes[i][0];
    }
    const double scale = K.max_abs();
    for (const Vector* v : {&tx, &ty, &rot})
        for (double r : K.apply(*v)) ASSERT_NEAR(r, 0.0, 1e-12 * scale * 3.0);
}

TEST(Elasticity, PatchTest)
{
    // Linear displacement, constant stress: interior equations balance exactly.
    const Mesh m = generate_square_mesh(1.0, 6, DiagonalPattern::Alternating);
    const CoefficientField c = uniform_field(1.0, 1.7, 0.6);
    const SparseMatrix K = assemble_full_elasticity_stiffness(m, c);
    Vector u(2 * m.node_count());
    for (std::size_t i = 0; i < m.node_count(); ++i) {
        const auto [x, y] = m.nodes[i];
        u[2 * i] = 0.3 * x - 0.8 * y + 0.1;
        u[2 * i + 1] = 1.1 * x + 0.4 * y;
    }
    const Vector r = K.apply(u);
    const std::set<std::size_t> boundary(m.boundary.begin(), m.boundary.end());
    for (std::size_t i = 0; i < m.node_count(); ++i) {
        if (boundary.count(i)) continue;
        EXPECT_NEAR(r[2 * i], 0.0, 1e-12);
        EXPECT_NEAR(r[2 * i + 1], 0.0, 1e-12);
    }
}

TEST(Elasticity, ReducedSystem)
{
    const Mesh m = generate_square_mesh(1.0, 4);
    const auto p = assemble_elasticity(m, uniform_field(2.0, 1.0, 1.0));
    EXPECT_EQ(p.dofs_per_node, 2u);
    EXPECT_EQ(p.total_dofs, 2 * m.node_count());
    EXPECT_EQ(p.size(), 2u * 9u);
    EXPECT_GT(smallest_generalized_eigenvalue(p.K, p.M), 0.0);
    const Vector back = p.restrict(p.expand(random_vector(p.size())));
    EXPECT_EQ(back.size(), p.size());
    const Vector full = p.expand(Vector(p.size(), 1.0));
    for (std::size_t b : m.boundary) {
        EXPECT_EQ(full[2 * b], 0.0);
        EXPECT_EQ(full[2 * b + 1], 0.0);
    }
}

TEST(Elasticity, WaveSpeeds)
{
    auto check = [](double lambda, double mu, double cp, double cs) {
        const auto [p, s] = wave_speeds(uniform_field(1.0, lambda, mu), 0);
        EXPECT_NEAR(p, cp, 1e-14);
        EXPECT_NEAR(s, cs, 1e-14);
    };
    check(200.0, 100.0, 20.0, 10.0);
    check(2.0, 1.0, 2.0, 1.0);
    check(0.0, 1.0, std::sqrt(2.0), 1.0);
    EXPECT_THROW(wave_speeds(uniform_field(1.0, 1.0, 1.0), 3), DomainError);
}

TEST(Probe, NodesAndLinearFields)
{
    const Mesh m = generate_square_mesh(1.0, 5, DiagonalPattern::Alternating);
    Vector f(m.node_count()), g(2 * m.node_count());
    for (std::size_t i = 0; i < m.node_count(); ++i) {
        f[i] = 2.0 * m.nodes[i][0] - 3.0 * m.nodes[i][1] + 0.5;
        g[2 * i] = f[i];
        g[2 * i + 1] = -f[i];
    }
    EXPECT_NEAR(probe(m, f, m.nodes[7])[0], f[7], 1e-14);
    for (int k = 0; k < 50; ++k) {
        const Point p{uniform(0.0, 1.0), uniform(0.0, 1.0)};
        const double want = 2.0 * p[0] - 3.0 * p[1] + 0.5;
        EXPECT_NEAR(probe(m, f, p)[0], want, 1e-13);
        const Vector v = probe(m, g, p, 2);
        EXPECT_NEAR(v[0], want, 1e-13);
        EXPECT_NEAR(v[1], -want, 1e-13);
    }
    const auto loc = locate(m, m.centroid(3));
    EXPECT_EQ(loc.element, 3u);
    for (double w : loc.weights) EXPECT_NEAR(w, 1.0 / 3, 1e-14);
    EXPECT_THROW(locate(m, Point{1.5, 0.5}), DomainError);
}

TEST(MeshIo, RoundTrip)
{
    for (const Mesh& m : {generate_square_mesh(1.0, 4, DiagonalPattern::Alternating),
                          generate_interval_mesh(2.0, 9, std::vector<double>{1.0}),
                          generate_inclusion_mesh(InclusionMeshSpec{.h_fine = 0.1, .h_coarse = 0.5})}) {
        const Mesh r = mesh_from_string(mesh_to_string(m));
        EXPECT_EQ(r.dim, m.dim);
        EXPECT_EQ(r.nodes, m.nodes);
        EXPECT_EQ(r.elements, m.elements);
        EXPECT_EQ(r.tags, m.tags);
        EXPECT_EQ(r.boundary, m.boundary);
        EXPECT_EQ(mesh_to_string(r), mesh_to_string(m));
    }
}

TEST(MeshIo, ErrorsCarryLineNumbers)
{
    try {
        mesh_from_string("2 3 1\n0 0\n1 0\n0 1\n0 1 7 0\n0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5u);
    }
    EXPECT_THROW(mesh_from_string("3 0 0\n"), ParseError);
    EXPECT_THROW(mesh_from_string("2 1 0\n0.0 abc\n0\n"), ParseError);
    EXPECT_THROW(mesh_from_string("2 1 0\n0 0\n"), ParseError);
}

TEST(Assembly, ElementOrderInvariance)
{
    const Mesh m = generate_inclusion_mesh(InclusionMeshSpec{.h_fine = 0.1, .h_coarse = 0.5});
    Mesh shuffled = m;
    std::vector<std::size_t> perm(m.element_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        shuffled.elements[i] = m.elements[perm[i]];
        shuffled.tags[i] = m.tags[perm[i]];
    }
    CoefficientField c;
    c.regions[0] = RegionCoefficients{1.0, 1.0, 2.0, 1.0};
    c.regions[1] = RegionCoefficients{5.0, 1.0, 200.0, 100.0};
    c.regions[2] = RegionCoefficients{3.0, 1.0, 20.0, 10.0};
    const auto a = assemble_elasticity(m, c);
    const auto b = assemble_elasticity(shuffled, c);
    ASSERT_EQ(a.size(), b.size());
    for (int k = 0; k < 5; ++k) {
        const Vector x = random_vector(a.size());
        const Vector ka = a.K.apply(x), kb = b.K.apply(x), ma = a.M.apply(x), mb = b.M.apply(x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            ASSERT_NEAR(ka[i], kb[i], 1e-10 * a.K.max_abs());
            ASSERT_NEAR(ma[i], mb[i], 1e-12 * a.M.max_abs());
        }
    }
}

TEST(Coefficients, Validation)
{
    CoefficientField c;
    c.regions[0] = RegionCoefficients{-1.0, 1.0, 1.0, 1.0};
    EXPECT_THROW(c.validate(), DomainError);
    EXPECT_THROW(uniform_field(1.0, 1.0, 1.0).at(4), DomainError);
}
