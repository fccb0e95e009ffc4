#include <cmath>
#include <numbers>

#include "strudyn/analysis/norms.hpp"
#include "strudyn/bench/experiments.hpp"

namespace strudyn {

double wave2d_exact(double x, double y, double t)
{
    using std::numbers::pi;
    return std::sin(2.0 * pi * t) * std::sin(pi * x) * std::sin(pi * y);
}

SquareSizing parse_square_sizing(const std::string& s)
{
    if (s == "side") return SquareSizing::CellSide;
    if (s == "diameter") return SquareSizing::Diameter;
    throw DomainError("unknown mesh sizing '" + s + "' (expected side or diameter)");
}

Mesh wave2d_mesh(double h, SquareSizing sizing)
{
    if (!(h > 0.0)) throw DomainError("wave2d: h must be positive");
    if (sizing == SquareSizing::CellSide)
        return generate_square_mesh(1.0, square_cells_for_side(1.0, h), DiagonalPattern::Uniform);
    return generate_square_mesh(1.0, square_cells_for_diameter(1.0, h), DiagonalPattern::Alternating);
}

ErrorReport run_wave2d_level(const std::string& method, double h, double T, double c2, SquareSizing sizing)
{
    using std::numbers::pi;
    const Mesh mesh = wave2d_mesh(h, sizing);
    AssembledProblem prob = assemble_scalar_wave(mesh, c2);
    const SparseMatrix K_unit = c2 == 1.0 ? prob.K : assemble_scalar_wave(mesh, 1.0).K;

    const std::size_t n = prob.size();
    Vector shape(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Point& p = mesh.nodes[prob.free_dofs[k]];
        shape[k] = std::sin(pi * p[0]) * std::sin(pi * p[1]);
    }
    const SecondOrderSystem sys = make_linear_system(prob.M, prob.K, Vector(n, 0.0), scaled(2.0 * pi, shape));

    CompareOptions opts;
    opts.norms.push_back(
        {"u", [](std::span<const double> e) { return Vector(e.begin(), e.end()); }, prob.M, K_unit});
    const Reference reference = [&shape](std::size_t, double t) { return scaled(std::sin(2.0 * pi * t), shape); };
    return run_and_compare(sys, method, T, h, reference, opts).reports.front();
}

Wave2dResult run_wave2d(const Wave2dConfig& cfg)
{
    Wave2dResult res;
    for (double h : cfg.ladder) {
        Wave2dLevel lvl;
        lvl.report = run_wave2d_level(cfg.ladder_method, h, cfg.T, cfg.c2, cfg.sizing);
        lvl.cells = cfg.sizing == SquareSizing::CellSide ? square_cells_for_side(1.0, h)
                                                         : square_cells_for_diameter(1.0, h);
        lvl.rate_l2 = lvl.rate_h1 = std::nan("");
        if (!res.ladder.empty()) {
            const ErrorReport& prev = res.ladder.back().report;
            lvl.rate_l2 = empirical_rate(prev.linf_l2, lvl.report.linf_l2, prev.dt, h);
            lvl.rate_h1 = empirical_rate(prev.l2_h1, lvl.report.l2_h1, prev.dt, h);
        }
        res.ladder.push_back(std::move(lvl));
    }
    for (double h : cfg.comparison_levels)
        for (const std::string& m : cfg.comparison_methods) res.comparison.push_back(run_wave2d_level(m, h, cfg.T, cfg.c2, cfg.sizing));
    return res;
}

} // namespace strudyn
