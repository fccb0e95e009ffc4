#include <cmath>
#include <map>

#include "strudyn/bench/experiments.hpp"

namespace strudyn {

ElasticityProblem make_elasticity_problem(const ElasticityConfig& cfg, const Mesh* mesh)
{
    ElasticityProblem ep;
    ep.mesh = mesh ? *mesh : generate_inclusion_mesh(cfg.mesh);
    ep.mesh.validate();
    const RegionCoefficients inner{.rho = cfg.rho, .lambda = cfg.lambda_inner, .mu = cfg.mu_inner};
    const RegionCoefficients outer{.rho = cfg.rho, .lambda = cfg.lambda_outer, .mu = cfg.mu_outer};
    ep.coeffs.regions = {{0, outer}, {1, inner}, {2, inner}};
    ep.coeffs.validate();
    ep.problem = assemble_elasticity(ep.mesh, ep.coeffs);
    const AssembledProblem unit = assemble_scalar_wave(ep.mesh, 1.0);
    if (2 * unit.size() != ep.problem.size())
        throw DimensionError("elasticity: scalar and vector free sets disagree");
    ep.M_unit = unit.M;
    ep.K_unit = unit.K;

    // Impulsive vertical displacement exp(-r^2/2) on zone 1, velocity d / dt.
    const std::size_t n = ep.problem.size();
    Vector u0(n, 0.0), v0(n, 0.0);
    const Point& c = cfg.mesh.center;
    for (std::size_t k = 1; k < n; k += 2) {
        const Point& p = ep.mesh.nodes[ep.problem.free_dofs[k] / 2];
        const double r2 = (p[0] - c[0]) * (p[0] - c[0]) + (p[1] - c[1]) * (p[1] - c[1]);
        if (r2 < cfg.mesh.r_zone1 * cfg.mesh.r_zone1) {
            u0[k] = std::exp(-0.5 * r2);
            v0[k] = u0[k] / cfg.dt;
        }
    }
    ep.system = make_linear_system(ep.problem.M, ep.problem.K, std::move(u0), std::move(v0));
    return ep;
}

std::vector<CourantReport> courant_numbers(const Mesh& mesh, const CoefficientField& coeffs, double dt)
{
    std::map<int, std::pair<double, std::size_t>> diam;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        auto& [sum, count] = diam[mesh.tags[e]];
        sum += mesh.diameter(e);
        ++count;
    }
    std::vector<CourantReport> out;
    for (const auto& [tag, sc] : diam) {
        CourantReport r;
        r.region = tag;
        r.c_p = wave_speeds(coeffs, tag).first;
        r.h = sc.first / static_cast<double>(sc.second);
        r.courant = r.c_p * dt / r.h;
        out.push_back(r);
    }
    return out;
}

ElasticityResult run_elasticity(const ElasticityProblem& ep, const ElasticityConfig& cfg)
{
    ElasticityResult res;
    res.courant = courant_numbers(ep.mesh, ep.coeffs, cfg.dt);

    CompareOptions opts;
    opts.relative = true;
    opts.snapshot_times = cfg.snapshot_times;
    opts.norms.push_back({"x", component_extractor(2, 0), ep.M_unit, ep.K_unit});
    opts.norms.push_back({"y", component_extractor(2, 1), ep.M_unit, ep.K_unit});
    for (const auto& [name, p] : cfg.probes) {
        opts.probes.push_back(point_probe(name + "_x", ep.mesh, ep.problem, p, 0));
        opts.probes.push_back(point_probe(name + "_y", ep.mesh, ep.problem, p, 1));
    }

    std::vector<Vector> levels;
    std::vector<bool> taken(cfg.snapshot_times.size(), false);
    IntegrateOptions io;
    io.record = RecordMode::None;
    io.observer = [&](std::size_t, const State& s) {
        std::vector<double> row;
        for (const ProbeSpec& p : opts.probes) row.push_back(p.eval(s.u));
        res.reference_probes.push_back(std::move(row));
        for (std::size_t k = 0; k < cfg.snapshot_times.size(); ++k)
            if (!taken[k] && std::abs(s.t - cfg.snapshot_times[k]) <= 0.5 * cfg.dt) {
                res.reference_snapshots.push_back(s);
                taken[k] = true;
            }
        levels.push_back(s.u);
    };
    integrate(ep.system, Method::parse(cfg.reference_method), cfg.T, cfg.dt, io);

    res.runs = compare_methods(ep.system, cfg.methods, cfg.T, cfg.dt, stored_reference(std::move(levels)), opts);
    return res;
}

} // namespace strudyn
