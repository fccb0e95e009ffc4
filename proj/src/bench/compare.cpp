#include "strudyn/bench/compare.hpp"

#include <chrono>
#include <cmath>
#include <memory>

#include "strudyn/analysis/norms.hpp"

namespace strudyn {

MethodRun run_and_compare(const SecondOrderSystem& sys, const std::string& method, double T, double h,
                          const Reference& reference, const CompareOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    const Method m = Method::parse(method);
    MethodRun run;
    run.method = method;

    std::vector<NormAccumulator> err, ref;
    for (const NormSpec& ns : opts.norms) {
        err.emplace_back(ns.M, ns.K, h);
        ref.emplace_back(ns.M, ns.K, h);
    }
    std::vector<SeriesAccumulator> perr(opts.probes.size(), SeriesAccumulator(h));
    std::vector<bool> snap_taken(opts.snapshot_times.size(), false);

    IntegrateOptions io;
    io.record = RecordMode::None;
    io.newton = opts.newton;
    io.observer = [&](std::size_t n, const State& s) {
        const Vector r = reference(n, s.t);
        require_same_size(r.size(), s.u.size(), "run_and_compare");
        const Vector e = sub(s.u, r);
        const bool in_sum = n > 0;
        for (std::size_t k = 0; k < opts.norms.size(); ++k) {
            err[k].add(opts.norms[k].extract(e), in_sum);
            if (opts.relative) ref[k].add(opts.norms[k].extract(r), in_sum);
        }
        std::vector<double> row, vrow;
        for (std::size_t p = 0; p < opts.probes.size(); ++p) {
            const double v = opts.probes[p].eval(s.u);
            row.push_back(v);
            vrow.push_back(opts.probes[p].eval(s.w));
            perr[p].add(v - opts.probes[p].eval(r), in_sum);
        }
        run.probe_series.push_back(std::move(row));
        run.velocity_series.push_back(std::move(vrow));
        for (std::size_t k = 0; k < opts.snapshot_times.size(); ++k)
            if (!snap_taken[k] && std::abs(s.t - opts.snapshot_times[k]) <= 0.5 * h) {
                run.snapshots.push_back(s);
                snap_taken[k] = true;
            }
    };
    integrate(sys, m, T, h, io);

    std::vector<ProbeError> probes;
    for (std::size_t p = 0; p < opts.probes.size(); ++p)
        probes.push_back({opts.probes[p].name, perr[p].l2(), perr[p].linf()});
    for (std::size_t k = 0; k < opts.norms.size(); ++k) {
        ErrorReport r;
        r.method = method;
        r.label = m.label();
        r.component = opts.norms[k].component;
        r.h = h;
        r.dt = h;
        r.T = static_cast<double>(step_count(T, h)) * h;
        r.linf_l2 = err[k].linf_l2();
        r.l2_h1 = err[k].l2_h1();
        r.linf_linf = err[k].linf_linf();
        if (opts.relative) {
            r.linf_l2 /= ref[k].linf_l2();
            r.l2_h1 /= ref[k].l2_h1();
            r.linf_linf /= ref[k].linf_linf();
        }
        r.probes = probes;
        run.reports.push_back(std::move(r));
    }
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

std::vector<MethodRun> compare_methods(const SecondOrderSystem& sys, const std::vector<std::string>& methods,
                                       double T, double h, const Reference& reference, const CompareOptions& opts)
{
    std::vector<MethodRun> out;
    for (const std::string& m : methods) out.push_back(run_and_compare(sys, m, T, h, reference, opts));
    return out;
}

Reference stored_reference(std::vector<Vector> levels)
{
    auto data = std::make_shared<const std::vector<Vector>>(std::move(levels));
    return [data](std::size_t n, double) -> Vector {
        if (n >= data->size()) throw DimensionError("stored_reference: level out of range");
        return (*data)[n];
    };
}

ProbeSpec point_probe(const std::string& name, const Mesh& mesh, const AssembledProblem& problem, const Point& p,
                      std::size_t component)
{
    if (component >= problem.dofs_per_node) throw DomainError("point_probe: component out of range");
    const MeshLocation loc = locate(mesh, p);
    std::vector<long long> free_index(problem.total_dofs, -1);
    for (std::size_t k = 0; k < problem.free_dofs.size(); ++k)
        free_index[problem.free_dofs[k]] = static_cast<long long>(k);
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t i = 0; i < mesh.nodes_per_element(); ++i) {
        const long long k = free_index[mesh.elements[loc.element][i] * problem.dofs_per_node + component];
        if (k >= 0 && loc.weights[i] != 0.0) terms.emplace_back(static_cast<std::size_t>(k), loc.weights[i]);
    }
    const std::size_t n = problem.size();
    return {name, [terms, n](std::span<const double> u) {
                require_same_size(u.size(), n, "point_probe");
                double v = 0.0;
                for (const auto& [k, w] : terms) v += w * u[k];
                return v;
            }};
}

std::function<Vector(std::span<const double>)> component_extractor(std::size_t per_node, std::size_t c)
{
    if (c >= per_node) throw DomainError("component_extractor: component out of range");
    return [per_node, c](std::span<const double> u) {
        if (u.size() % per_node != 0)
            throw DimensionError("component_extractor: length " + std::to_string(u.size()) + " is not a multiple of " +
                                 std::to_string(per_node));
        Vector out(u.size() / per_node);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = u[k * per_node + c];
        return out;
    };
}

} // namespace strudyn
