#include <algorithm>

#include "strudyn/bench/experiments.hpp"
#include "strudyn/integrators/modal.hpp"

namespace strudyn {

RodProblem make_rod_problem(const RodConfig& cfg)
{
    if (cfg.E.size() != cfg.breakpoints.size() + 1)
        throw DomainError("rod: need one Young modulus per region (breakpoints + 1)");
    RodProblem rp;
    rp.mesh = generate_interval_mesh(cfg.length, cfg.nodes, cfg.breakpoints);
    CoefficientField coeffs, unit;
    for (std::size_t k = 0; k < cfg.E.size(); ++k) {
        coeffs.regions[static_cast<int>(k)] = {.rho = cfg.rho, .E = cfg.E[k]};
        unit.regions[static_cast<int>(k)] = {.rho = 1.0, .E = 1.0};
    }
    coeffs.validate();
    rp.problem = assemble_rod(rp.mesh, coeffs, true);
    const AssembledProblem up = assemble_rod(rp.mesh, unit, true);
    rp.M_unit = up.M;
    rp.K_unit = up.K;
    const std::size_t n = rp.problem.size();
    rp.system = make_linear_system(rp.problem.M, rp.problem.K, Vector(n, cfg.u0), Vector(n, cfg.v0));
    return rp;
}

Wave1dResult run_wave1d(const Wave1dConfig& cfg)
{
    if (cfg.end_times.empty()) throw DomainError("wave1d: no end times");
    const RodProblem rp = make_rod_problem(cfg.rod);
    const ModalSolution modal(rp.system);
    const Reference reference = [&modal](std::size_t, double t) { return modal.at(t).u; };
    const std::size_t tip = rp.problem.size() - 1;

    CompareOptions opts;
    opts.norms.push_back({"u", [](std::span<const double> e) { return Vector(e.begin(), e.end()); }, rp.M_unit,
                          rp.K_unit});
    opts.probes.push_back({"x=L", [tip](std::span<const double> u) { return u[tip]; }});

    Wave1dResult res;
    const double t_max = *std::max_element(cfg.end_times.begin(), cfg.end_times.end());
    for (double T : cfg.end_times) {
        auto runs = compare_methods(rp.system, cfg.methods, T, cfg.dt, reference, opts);
        for (const MethodRun& r : runs) res.reports.push_back(r.reports.front());
        if (T == t_max && res.runs.empty()) res.runs = std::move(runs);
    }
    const std::size_t levels = step_count(t_max, cfg.dt) + 1;
    for (std::size_t n = 0; n < levels; ++n) {
        const State s = modal.at(static_cast<double>(n) * cfg.dt);
        res.exact_u.push_back(s.u[tip]);
        res.exact_w.push_back(s.w[tip]);
    }
    return res;
}

} // namespace strudyn
