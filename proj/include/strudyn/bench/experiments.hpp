#pragma once

#include <string>
#include <vector>

#include "strudyn/bench/compare.hpp"

namespace strudyn {

// ---- nonlinear two-dof problem ----

struct TwoDofConfig {
    double T = 1.0;
    double h = 1e-3;
    std::vector<std::string> methods{"trbdf2", "theta051", "bdf2", "newmark-r0", "newmark-r025", "cha-r0", "cha-r025"};
    /// The Gauss4 oracle runs at h / oracle_refinement.
    int oracle_refinement = 100;
    NewtonConfig newton{.max_iterations = 60};
};

struct TwoDofRun {
    std::string method;
    std::vector<double> t;
    /// errors[n] = |y1 - y1*|, |y2 - y2*|, |y1' - y1'*|, |y2' - y2'*| at level n.
    std::vector<std::array<double, 4>> errors;
    std::array<double, 4> linf{};
};

/// Oracle levels at multiples of h, integrated with Gauss4 at h / refinement.
std::vector<State> twodof_oracle(const SecondOrderSystem& sys, double T, double h, int refinement,
                                 const NewtonConfig& cfg);

std::vector<TwoDofRun> run_twodof(const SecondOrderSystem& sys, const TwoDofConfig& cfg);
std::vector<TwoDofRun> run_twodof(const TwoDofConfig& cfg);

// ---- stiff rod ----

struct RodConfig {
    double length = 10.5;
    std::size_t nodes = 21;
    double rho = 0.01;
    /// Young modulus per region, regions split at the breakpoints.
    std::vector<double> E{1e7, 1e2, 1e7};
    std::vector<double> breakpoints{0.5, 10.0};
    double u0 = 0.0;
    double v0 = -1.0;
};

struct RodProblem {
    Mesh mesh;
    AssembledProblem problem;
    SecondOrderSystem system;
    /// Unit-coefficient mass and stiffness used by the norms.
    SparseMatrix M_unit;
    SparseMatrix K_unit;
};

RodProblem make_rod_problem(const RodConfig& cfg);

struct Wave1dConfig {
    RodConfig rod;
    double dt = 0.025;
    std::vector<double> end_times{1.0, 2.5};
    std::vector<std::string> methods{"bdf2", "newmark", "trbdf2"};
};

struct Wave1dResult {
    /// Rows ordered by end time, then method.
    std::vector<ErrorReport> reports;
    /// Runs to the largest end time; probe 0 is the displacement at x = L.
    std::vector<MethodRun> runs;
    /// Exact displacement and velocity at x = L per level of the longest run.
    std::vector<double> exact_u;
    std::vector<double> exact_w;
};

Wave1dResult run_wave1d(const Wave1dConfig& cfg);

// ---- 2D scalar wave ----

enum class SquareSizing {
    /// Cell side equal to h, uniform diagonals.
    CellSide,
    /// Element diameter at most h, alternating diagonals.
    Diameter,
};

SquareSizing parse_square_sizing(const std::string& s);

struct Wave2dConfig {
    std::vector<double> ladder{0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125};
    std::vector<double> comparison_levels{0.025, 0.0125};
    std::vector<std::string> comparison_methods{"bdf2", "newmark", "trbdf2"};
    std::string ladder_method = "trbdf2";
    double T = 1.0;
    double c2 = 2.0;
    SquareSizing sizing = SquareSizing::CellSide;
};

struct Wave2dLevel {
    ErrorReport report;
    /// Rates against the previous ladder level; NaN on the first.
    double rate_l2 = 0.0;
    double rate_h1 = 0.0;
    std::size_t cells = 0;
};

struct Wave2dResult {
    std::vector<Wave2dLevel> ladder;
    std::vector<ErrorReport> comparison;
};

/// sin(2 pi t) sin(pi x) sin(pi y).
double wave2d_exact(double x, double y, double t);

Mesh wave2d_mesh(double h, SquareSizing sizing);

/// One method at h = dt on the unit square.
ErrorReport run_wave2d_level(const std::string& method, double h, double T = 1.0, double c2 = 2.0,
                             SquareSizing sizing = SquareSizing::CellSide);

Wave2dResult run_wave2d(const Wave2dConfig& cfg);

// ---- 2D elasticity with a stiff inclusion ----

struct ElasticityConfig {
    InclusionMeshSpec mesh;
    double rho = 1.0;
    double lambda_inner = 200.0;
    double mu_inner = 100.0;
    double lambda_outer = 2.0;
    double mu_outer = 1.0;
    double T = 1e-2;
    double dt = 1.25e-4;
    std::vector<std::string> methods{"ie", "newmark-b13", "cn", "trbdf2"};
    std::string reference_method = "gauss4";
    std::vector<std::pair<std::string, Point>> probes{{"A", {1.65, 1.65}}, {"B", {1.71, 1.65}}, {"C", {1.80, 1.65}}};
    std::vector<double> snapshot_times{0.0, 2.5e-3, 5e-3, 7.5e-3};
};

struct ElasticityProblem {
    Mesh mesh;
    CoefficientField coeffs;
    AssembledProblem problem;
    SecondOrderSystem system;
    /// Scalar unit-coefficient mass and stiffness on the free nodes.
    SparseMatrix M_unit;
    SparseMatrix K_unit;
};

/// Builds the problem; `mesh` replaces the generated inclusion mesh when non-empty.
ElasticityProblem make_elasticity_problem(const ElasticityConfig& cfg, const Mesh* mesh = nullptr);

struct CourantReport {
    int region = 0;
    double c_p = 0.0;
    /// Mean element diameter over the region.
    double h = 0.0;
    double courant = 0.0;
};

std::vector<CourantReport> courant_numbers(const Mesh& mesh, const CoefficientField& coeffs, double dt);

struct ElasticityResult {
    /// Runs with relative norms for components x (report 0) and y (report 1);
    /// probes are named "<point>_x", "<point>_y".
    std::vector<MethodRun> runs;
    /// Reference probe values per level, same probe order.
    std::vector<std::vector<double>> reference_probes;
    std::vector<State> reference_snapshots;
    std::vector<CourantReport> courant;
};

ElasticityResult run_elasticity(const ElasticityProblem& prob, const ElasticityConfig& cfg);

} // namespace strudyn
