#include "strudyn/fem/assembly.hpp"

#include <algorithm>
#include <cmath>

#include "strudyn/errors.hpp"

namespace strudyn {

const RegionCoefficients& CoefficientField::at(int tag) const
{
    const auto it = regions.find(tag);
    if (it == regions.end()) throw DomainError("no coefficients for region " + std::to_string(tag));
    return it->second;
}

void CoefficientField::validate() const
{
    for (const auto& [tag, c] : regions)
        if (!(c.rho > 0.0) || !(c.E > 0.0) || !(c.mu > 0.0) || !(c.lambda >= 0.0))
            throw DomainError("invalid coefficients for region " + std::to_string(tag));
}

Vector AssembledProblem::expand(std::span<const double> free) const
{
    require_same_size(free.size(), free_dofs.size(), "AssembledProblem::expand");
    Vector full(total_dofs, 0.0);
    for (std::size_t k = 0; k < free_dofs.size(); ++k) full[free_dofs[k]] = free[k];
    return full;
}

Vector AssembledProblem::restrict(std::span<const double> full) const
{
    require_same_size(full.size(), total_dofs, "AssembledProblem::restrict");
    Vector free(free_dofs.size());
    for (std::size_t k = 0; k < free_dofs.size(); ++k) free[k] = full[free_dofs[k]];
    return free;
}

namespace {

struct Gradients {
    double area;
    double bx[3];
    double by[3];
};

Gradients p1_gradients(const Mesh& mesh, std::size_t e)
{
    const double area = mesh.measure(e);
    if (!(area > 1e-14)) throw DomainError("degenerate triangle " + std::to_string(e));
    const auto& el = mesh.elements[e];
    Gradients g{area, {}, {}};
    for (int i = 0; i < 3; ++i) {
        const Point& b = mesh.nodes[el[(i + 1) % 3]];
        const Point& c = mesh.nodes[el[(i + 2) % 3]];
        g.bx[i] = (b[1] - c[1]) / (2.0 * area);
        g.by[i] = (c[0] - b[0]) / (2.0 * area);
    }
    return g;
}

void require_dim(const Mesh& mesh, int dim, const char* where)
{
    if (mesh.dim != dim) throw DomainError(std::string(where) + ": wrong mesh dimension");
    mesh.validate();
}

std::vector<bool> boundary_flags(const Mesh& mesh)
{
    std::vector<bool> b(mesh.node_count(), false);
    for (std::size_t i : mesh.boundary) b[i] = true;
    return b;
}

AssembledProblem restrict_problem(std::size_t total, std::size_t per_node, const std::vector<bool>& fixed_node,
                                  const std::vector<Triplet>& m, const std::vector<Triplet>& k)
{
    AssembledProblem p;
    p.dofs_per_node = per_node;
    p.total_dofs = total;
    for (std::size_t d = 0; d < total; ++d)
        if (!fixed_node[d / per_node]) p.free_dofs.push_back(d);
    const SparseMatrix mf = SparseMatrix::from_triplets(total, total, m);
    const SparseMatrix kf = SparseMatrix::from_triplets(total, total, k);
    p.M = mf.restrict_to(p.free_dofs);
    p.K = kf.restrict_to(p.free_dofs);
    return p;
}

void scalar_triplets(const Mesh& mesh, double coef, std::vector<Triplet>& mt, std::vector<Triplet>& kt, bool mass)
{
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const auto& el = mesh.elements[e];
        const auto ke = p1_stiffness_element(mesh, e, coef);
        const auto me = mass ? p1_mass_element(mesh, e, 1.0) : decltype(ke){};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                kt.push_back({el[i], el[j], ke[i][j]});
                if (mass) mt.push_back({el[i], el[j], me[i][j]});
            }
    }
}

void elasticity_triplets(const Mesh& mesh, const CoefficientField& coeffs, std::vector<Triplet>& mt,
                         std::vector<Triplet>& kt, bool mass)
{
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const auto& el = mesh.elements[e];
        const RegionCoefficients& c = coeffs.at(mesh.tags[e]);
        const auto ke = elasticity_element(mesh, e, c.lambda, c.mu);
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b) kt.push_back({2 * el[a / 2] + a % 2, 2 * el[b / 2] + b % 2, ke[a][b]});
        if (!mass) continue;
        const auto me = p1_mass_element(mesh, e, c.rho);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t comp = 0; comp < 2; ++comp)
                    mt.push_back({2 * el[i] + comp, 2 * el[j] + comp, me[i][j]});
    }
}

} // namespace

std::array<std::array<double, 3>, 3> p1_mass_element(const Mesh& mesh, std::size_t e, double rho)
{
    const double area = mesh.measure(e);
    if (!(area > 1e-14)) throw DomainError("degenerate triangle " + std::to_string(e));
    std::array<std::array<double, 3>, 3> m{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = rho * area / 12.0 * (i == j ? 2.0 : 1.0);
    return m;
}

std::array<std::array<double, 3>, 3> p1_stiffness_element(const Mesh& mesh, std::size_t e, double coef)
{
    const Gradients g = p1_gradients(mesh, e);
    std::array<std::array<double, 3>, 3> k{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) k[i][j] = coef * g.area * (g.bx[i] * g.bx[j] + g.by[i] * g.by[j]);
    return k;
}

std::array<std::array<double, 6>, 6> elasticity_element(const Mesh& mesh, std::size_t e, double lambda, double mu)
{
    const Gradients g = p1_gradients(mesh, e);
    // Strain rows [eps_xx, eps_yy, 2 eps_xy] against dofs [u0, v0, u1, v1, u2, v2].
    double b[3][6] = {};
    for (int i = 0; i < 3; ++i) {
        b[0][2 * i] = g.bx[i];
        b[1][2 * i + 1] = g.by[i];
        b[2][2 * i] = g.by[i];
        b[2][2 * i + 1] = g.bx[i];
    }
    const double d[3][3] = {{lambda + 2.0 * mu, lambda, 0.0}, {lambda, lambda + 2.0 * mu, 0.0}, {0.0, 0.0, mu}};
    std::array<std::array<double, 6>, 6> k{};
    for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 6; ++c) {
            double s = 0.0;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q) s += b[p][a] * d[p][q] * b[q][c];
            k[a][c] = g.area * s;
        }
    return k;
}

AssembledProblem assemble_rod(const Mesh& mesh, const CoefficientField& coeffs, bool clamped_left)
{
    require_dim(mesh, 1, "assemble_rod");
    coeffs.validate();
    std::vector<Triplet> mt, kt;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const auto& el = mesh.elements[e];
        const RegionCoefficients& c = coeffs.at(mesh.tags[e]);
        const double l = mesh.measure(e);
        const double me[2][2] = {{c.rho * l / 3.0, c.rho * l / 6.0}, {c.rho * l / 6.0, c.rho * l / 3.0}};
        const double ke[2][2] = {{c.E / l, -c.E / l}, {-c.E / l, c.E / l}};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                mt.push_back({el[i], el[j], me[i][j]});
                kt.push_back({el[i], el[j], ke[i][j]});
            }
    }
    std::vector<bool> fixed(mesh.node_count(), false);
    if (clamped_left) {
        const auto it = std::min_element(mesh.nodes.begin(), mesh.nodes.end(),
                                         [](const Point& a, const Point& b) { return a[0] < b[0]; });
        fixed[static_cast<std::size_t>(it - mesh.nodes.begin())] = true;
    }
    return restrict_problem(mesh.node_count(), 1, fixed, mt, kt);
}

AssembledProblem assemble_scalar_wave(const Mesh& mesh, double c2)
{
    require_dim(mesh, 2, "assemble_scalar_wave");
    if (!(c2 > 0.0)) throw DomainError("assemble_scalar_wave: c^2 must be positive");
    std::vector<Triplet> mt, kt;
    scalar_triplets(mesh, c2, mt, kt, true);
    return restrict_problem(mesh.node_count(), 1, boundary_flags(mesh), mt, kt);
}

AssembledProblem assemble_elasticity(const Mesh& mesh, const CoefficientField& coeffs)
{
    require_dim(mesh, 2, "assemble_elasticity");
    coeffs.validate();
    std::vector<Triplet> mt, kt;
    elasticity_triplets(mesh, coeffs, mt, kt, true);
    return restrict_problem(2 * mesh.node_count(), 2, boundary_flags(mesh), mt, kt);
}

SparseMatrix assemble_full_scalar_stiffness(const Mesh& mesh, double coef)
{
    require_dim(mesh, 2, "assemble_full_scalar_stiffness");
    std::vector<Triplet> mt, kt;
    scalar_triplets(mesh, coef, mt, kt, false);
    return SparseMatrix::from_triplets(mesh.node_count(), mesh.node_count(), kt);
}

SparseMatrix assemble_full_elasticity_stiffness(const Mesh& mesh, const CoefficientField& coeffs)
{
    require_dim(mesh, 2, "assemble_full_elasticity_stiffness");
    std::vector<Triplet> mt, kt;
    elasticity_triplets(mesh, coeffs, mt, kt, false);
    return SparseMatrix::from_triplets(2 * mesh.node_count(), 2 * mesh.node_count(), kt);
}

std::pair<double, double> wave_speeds(const CoefficientField& coeffs, int region)
{
    const RegionCoefficients& c = coeffs.at(region);
    return {std::sqrt((c.lambda + 2.0 * c.mu) / c.rho), std::sqrt(c.mu / c.rho)};
}

} // namespace strudyn
