#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "strudyn/integrators/galpha.hpp"
#include "strudyn/integrators/newton.hpp"
#include "strudyn/model/system.hpp"

namespace strudyn {

enum class MethodKind { TrBdf2, GAlpha, Bdf2, Theta, Gauss4 };

/// A time integrator and its parameters, identified by a short id:
/// trbdf2, newmark, newmark-b13, newmark-r0, newmark-r025, newmark-r05,
/// cha-r0, cha-r025, cha-r05, bdf2, cn, theta051, ie, gauss4.
struct Method {
    MethodKind kind = MethodKind::TrBdf2;
    std::string id = "trbdf2";
    GAlphaParameters galpha;
    double theta = 0.5;

    static Method parse(const std::string& id);
    /// Human-readable name used in tables.
    std::string label() const;
};

std::vector<std::string> known_method_ids();

/// Advances one system with one method at a fixed step. Steppers carry
/// whatever history the method needs (acceleration, previous level), so
/// steps must be taken in sequence from the state passed to start().
class Stepper {
public:
    virtual ~Stepper() = default;
    virtual void start(const State& s0) = 0;
    virtual State step(const State& s) = 0;
    /// Newton iterations of the most recent step, summed over stages.
    virtual int last_iterations() const = 0;
};

std::unique_ptr<Stepper> make_stepper(const SecondOrderSystem& sys, const Method& method, double h,
                                      const NewtonConfig& cfg = {});

enum class RecordMode { All, Probes, None };

struct IntegrateOptions {
    RecordMode record = RecordMode::All;
    /// Components kept when record == Probes.
    std::vector<std::size_t> probes;
    /// Called with (step index, state) for n = 0..N, after recording.
    std::function<void(std::size_t, const State&)> observer;
    NewtonConfig newton;
};

/// N = max(1, round(T / h)) uniform steps, t^n = n h. With RecordMode::None
/// only the initial and final states are kept. Step failures are rethrown as
/// StepError carrying the step index.
Trajectory integrate(const SecondOrderSystem& sys, const Method& method, double T, double h,
                     const IntegrateOptions& opts = {});

std::size_t step_count(double T, double h);

} // namespace strudyn
