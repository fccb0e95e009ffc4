#pragma once

#include <functional>
#include <string>
#include <vector>

#include "strudyn/analysis/report.hpp"
#include "strudyn/fem/assembly.hpp"
#include "strudyn/integrators/integrate.hpp"

namespace strudyn {

/// Reference displacement at level n (time t).
using Reference = std::function<Vector(std::size_t n, double t)>;

/// One space-time norm: `extract` maps the displacement vector to the
/// field measured with the (M, K) pair.
struct NormSpec {
    std::string component;
    std::function<Vector(std::span<const double>)> extract;
    SparseMatrix M;
    SparseMatrix K;
};

/// A scalar observable of the displacement vector, e.g. a point value.
struct ProbeSpec {
    std::string name;
    std::function<double(std::span<const double>)> eval;
};

struct CompareOptions {
    /// Divide every norm by the same norm of the reference.
    bool relative = false;
    std::vector<NormSpec> norms;
    std::vector<ProbeSpec> probes;
    NewtonConfig newton;
    /// Snapshots of the full displacement are kept at the levels closest to these times.
    std::vector<double> snapshot_times;
};

struct MethodRun {
    std::string method;
    /// One report per NormSpec, each carrying all probe errors.
    std::vector<ErrorReport> reports;
    /// probe_series[n][p]: probe p of the computed solution at level n.
    std::vector<std::vector<double>> probe_series;
    /// The same probes applied to the velocity.
    std::vector<std::vector<double>> velocity_series;
    std::vector<State> snapshots;
    double seconds = 0.0;
};

MethodRun run_and_compare(const SecondOrderSystem& sys, const std::string& method, double T, double h,
                          const Reference& reference, const CompareOptions& opts);

/// One run per method, rows in the order given.
std::vector<MethodRun> compare_methods(const SecondOrderSystem& sys, const std::vector<std::string>& methods,
                                       double T, double h, const Reference& reference, const CompareOptions& opts);

/// Reference built from a stored trajectory (one state per level).
Reference stored_reference(std::vector<Vector> levels);

/// Probe of one component at a mesh point, evaluated on the free-dof vector.
ProbeSpec point_probe(const std::string& name, const Mesh& mesh, const AssembledProblem& problem, const Point& p,
                      std::size_t component = 0);

/// Extracts component c of a free-dof vector with `per_node` interleaved
/// components, assuming every component of a node is free or fixed together.
std::function<Vector(std::span<const double>)> component_extractor(std::size_t per_node, std::size_t c);

} // namespace strudyn
