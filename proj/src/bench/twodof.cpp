#include <cmath>

#include "strudyn/bench/experiments.hpp"

namespace strudyn {

std::vector<State> twodof_oracle(const SecondOrderSystem& sys, double T, double h, int refinement,
                                 const NewtonConfig& cfg)
{
    if (refinement < 1) throw DomainError("twodof_oracle: refinement must be at least 1");
    const auto r = static_cast<std::size_t>(refinement);
    const std::size_t levels = step_count(T, h) + 1;
    std::vector<State> out;
    out.reserve(levels);
    IntegrateOptions io;
    io.record = RecordMode::None;
    io.newton = cfg;
    io.observer = [&](std::size_t n, const State& s) {
        if (n % r == 0 && out.size() < levels) out.push_back(s);
    };
    integrate(sys, Method::parse("gauss4"), static_cast<double>(levels - 1) * h, h / refinement, io);
    if (out.size() != levels) throw DomainError("twodof_oracle: oracle levels do not align with h");
    return out;
}

std::vector<TwoDofRun> run_twodof(const SecondOrderSystem& sys, const TwoDofConfig& cfg)
{
    if (sys.size() != 2) throw DimensionError("run_twodof: system must have two dofs");
    const std::vector<State> oracle = twodof_oracle(sys, cfg.T, cfg.h, cfg.oracle_refinement, cfg.newton);
    const double T = static_cast<double>(oracle.size() - 1) * cfg.h;
    std::vector<TwoDofRun> runs;
    for (const std::string& id : cfg.methods) {
        TwoDofRun run;
        run.method = id;
        IntegrateOptions io;
        io.record = RecordMode::None;
        io.newton = cfg.newton;
        io.observer = [&](std::size_t n, const State& s) {
            const State& o = oracle.at(n);
            const std::array<double, 4> e{std::abs(s.u[0] - o.u[0]), std::abs(s.u[1] - o.u[1]),
                                          std::abs(s.w[0] - o.w[0]), std::abs(s.w[1] - o.w[1])};
            for (std::size_t k = 0; k < 4; ++k) run.linf[k] = std::max(run.linf[k], e[k]);
            run.t.push_back(s.t);
            run.errors.push_back(e);
        };
        integrate(sys, Method::parse(id), T, cfg.h, io);
        runs.push_back(std::move(run));
    }
    return runs;
}

std::vector<TwoDofRun> run_twodof(const TwoDofConfig& cfg)
{
    return run_twodof(make_twodof_system(), cfg);
}

} // namespace strudyn
