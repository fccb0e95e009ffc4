#pragma once

#include <map>
#include <utility>
#include <vector>

#include "strudyn/fem/mesh.hpp"
#include "strudyn/linalg/sparse_matrix.hpp"

namespace strudyn {

/// Constant coefficients of one region. E is used by the rod, lambda and
/// mu by elasticity.
struct RegionCoefficients {
    double rho = 1.0;
    double E = 1.0;
    double lambda = 0.0;
    double mu = 1.0;
};

struct CoefficientField {
    std::map<int, RegionCoefficients> regions;

    /// Throws DomainError for unknown tags.
    const RegionCoefficients& at(int tag) const;
    void validate() const;
};

/// M and K restricted to the free dofs. Dofs of node i are
/// i * dofs_per_node + component.
struct AssembledProblem {
    SparseMatrix M;
    SparseMatrix K;
    std::size_t dofs_per_node = 1;
    std::size_t total_dofs = 0;
    /// free_dofs[k] is the full dof index of free unknown k.
    std::vector<std::size_t> free_dofs;

    std::size_t size() const noexcept { return free_dofs.size(); }
    /// Full-length vector with zeros on the Dirichlet dofs.
    Vector expand(std::span<const double> free) const;
    Vector restrict(std::span<const double> full) const;
};

/// Consistent mass rho l / 6 [[2,1],[1,2]] and stiffness E / l [[1,-1],[-1,1]].
/// The left node is eliminated when clamped_left; the right end is natural.
AssembledProblem assemble_rod(const Mesh& mesh, const CoefficientField& coeffs, bool clamped_left = true);

/// P1 mass (rho = 1) and c2 times the Laplacian stiffness, homogeneous
/// Dirichlet data on every boundary node.
AssembledProblem assemble_scalar_wave(const Mesh& mesh, double c2);

/// Plane-strain elasticity, 2 dofs per node: stiffness from
/// 2 mu eps(u):eps(v) + lambda div u div v with piecewise-constant lambda,
/// mu; vector consistent mass with rho. Homogeneous Dirichlet on boundary nodes.
AssembledProblem assemble_elasticity(const Mesh& mesh, const CoefficientField& coeffs);

/// Element matrices, exposed for hand-assembly checks.
std::array<std::array<double, 3>, 3> p1_mass_element(const Mesh& mesh, std::size_t e, double rho);
std::array<std::array<double, 3>, 3> p1_stiffness_element(const Mesh& mesh, std::size_t e, double coef);
std::array<std::array<double, 6>, 6> elasticity_element(const Mesh& mesh, std::size_t e, double lambda, double mu);

/// Full (unreduced) matrices over all nodes, used by kernel checks.
SparseMatrix assemble_full_scalar_stiffness(const Mesh& mesh, double coef);
SparseMatrix assemble_full_elasticity_stiffness(const Mesh& mesh, const CoefficientField& coeffs);

/// (c_P, c_S) = (sqrt((lambda + 2 mu) / rho), sqrt(mu / rho)).
std::pair<double, double> wave_speeds(const CoefficientField& coeffs, int region);

} // namespace strudyn
