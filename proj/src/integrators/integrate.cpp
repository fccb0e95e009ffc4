#include "strudyn/integrators/integrate.hpp"

#include <cmath>
#include <map>
#include <optional>

#include "strudyn/integrators/bdf2.hpp"
#include "strudyn/integrators/gauss4.hpp"
#include "strudyn/integrators/theta.hpp"
#include "strudyn/integrators/trbdf2.hpp"

namespace strudyn {

namespace {

const std::map<std::string, std::string>& labels()
{
    static const std::map<std::string, std::string> m = {
        {"trbdf2", "TR-BDF2"},
        {"newmark", "Newmark"},
        {"newmark-b13", "Newmark b=1/3"},
        {"newmark-r0", "Newmark r=0"},
        {"newmark-r025", "Newmark r=0.25"},
        {"newmark-r05", "Newmark r=0.5"},
        {"cha-r0", "CH-alpha r=0"},
        {"cha-r025", "CH-alpha r=0.25"},
        {"cha-r05", "CH-alpha r=0.5"},
        {"bdf2", "BDF2"},
        {"cn", "Crank-Nicolson"},
        {"theta051", "theta=0.51"},
        {"ie", "Implicit Euler"},
        {"gauss4", "Gauss4"},
    };
    return m;
}

class TrBdf2Stepper final : public Stepper {
public:
    TrBdf2Stepper(const SecondOrderSystem& sys, double h, const NewtonConfig& cfg)
        : sys_(sys), h_(h), cfg_(cfg), ws_(sys, h) {}
    void start(const State&) override {}
    State step(const State& s) override { return trbdf2_step(sys_, s, h_, ws_, cfg_); }
    int last_iterations() const override { return ws_.stage1_iterations() + ws_.stage2_iterations(); }

private:
    const SecondOrderSystem& sys_;
    double h_;
    NewtonConfig cfg_;
    TrBdf2Workspace ws_;
};

class GAlphaStepper final : public Stepper {
public:
    GAlphaStepper(const SecondOrderSystem& sys, double h, const GAlphaParameters& p, const NewtonConfig& cfg)
        : sys_(sys), h_(h), cfg_(cfg), ws_(sys, h, p) {}
    void start(const State& s0) override { accel_ = initial_acceleration(sys_, s0); }
    State step(const State& s) override
    {
        auto [next, a] = galpha_step(sys_, s, accel_, h_, ws_, cfg_);
        accel_ = std::move(a);
        return next;
    }
    int last_iterations() const override { return ws_.last_iterations(); }

private:
    const SecondOrderSystem& sys_;
    double h_;
    NewtonConfig cfg_;
    GAlphaWorkspace ws_;
    Vector accel_;
};

class ThetaStepper final : public Stepper {
public:
    ThetaStepper(const SecondOrderSystem& sys, double h, double theta, const NewtonConfig& cfg)
        : sys_(sys), h_(h), cfg_(cfg), ws_(sys, h, theta) {}
    void start(const State&) override {}
    State step(const State& s) override { return theta_step(sys_, s, h_, ws_, cfg_); }
    int last_iterations() const override { return ws_.last_iterations(); }

private:
    const SecondOrderSystem& sys_;
    double h_;
    NewtonConfig cfg_;
    ThetaWorkspace ws_;
};

// The first step is one Crank-Nicolson step.
class Bdf2Stepper final : public Stepper {
public:
    Bdf2Stepper(const SecondOrderSystem& sys, double h, const NewtonConfig& cfg)
        : sys_(sys), h_(h), cfg_(cfg), ws_(sys, h) {}
    void start(const State&) override { prev_.reset(); }
    State step(const State& s) override
    {
        State next;
        if (!prev_) {
            ThetaWorkspace cn(sys_, h_, 0.5);
            next = theta_step(sys_, s, h_, cn, cfg_);
            iters_ = cn.last_iterations();
        } else {
            next = bdf2_step(sys_, *prev_, s, h_, ws_, cfg_);
            iters_ = ws_.last_iterations();
        }
        prev_ = s;
        return next;
    }
    int last_iterations() const override { return iters_; }

private:
    const SecondOrderSystem& sys_;
    double h_;
    NewtonConfig cfg_;
    Bdf2Workspace ws_;
    std::optional<State> prev_;
    int iters_ = 0;
};

class Gauss4Stepper final : public Stepper {
public:
    Gauss4Stepper(const SecondOrderSystem& sys, double h, const NewtonConfig& cfg)
        : sys_(sys), h_(h), cfg_(cfg), ws_(sys, h) {}
    void start(const State&) override {}
    State step(const State& s) override { return gauss4_step(sys_, s, h_, ws_, cfg_); }
    int last_iterations() const override { return ws_.last_iterations(); }

private:
    const SecondOrderSystem& sys_;
    double h_;
    NewtonConfig cfg_;
    Gauss4Workspace ws_;
};

State restrict_state(const State& s, const std::vector<std::size_t>& probes)
{
    State r{s.t, Vector(probes.size()), Vector(probes.size())};
    for (std::size_t k = 0; k < probes.size(); ++k) {
        r.u[k] = s.u[probes[k]];
        r.w[k] = s.w[probes[k]];
    }
    return r;
}

} // namespace

Method Method::parse(const std::string& id)
{
    Method m;
    m.id = id;
    if (id == "trbdf2") m.kind = MethodKind::TrBdf2;
    else if (id == "newmark") { m.kind = MethodKind::GAlpha; m.galpha = newmark_params(0.25, 0.5); }
    else if (id == "newmark-b13") { m.kind = MethodKind::GAlpha; m.galpha = newmark_params(1.0 / 3.0, 0.5); }
    else if (id == "newmark-r0") { m.kind = MethodKind::GAlpha; m.galpha = newmark_rho_params(0.0); }
    else if (id == "newmark-r025") { m.kind = MethodKind::GAlpha; m.galpha = newmark_rho_params(0.25); }
    else if (id == "newmark-r05") { m.kind = MethodKind::GAlpha; m.galpha = newmark_rho_params(0.5); }
    else if (id == "cha-r0") { m.kind = MethodKind::GAlpha; m.galpha = galpha_params(0.0); }
    else if (id == "cha-r025") { m.kind = MethodKind::GAlpha; m.galpha = galpha_params(0.25); }
    else if (id == "cha-r05") { m.kind = MethodKind::GAlpha; m.galpha = galpha_params(0.5); }
    else if (id == "bdf2") m.kind = MethodKind::Bdf2;
    else if (id == "cn") { m.kind = MethodKind::Theta; m.theta = 0.5; }
    else if (id == "theta051") { m.kind = MethodKind::Theta; m.theta = 0.51; }
    else if (id == "ie") { m.kind = MethodKind::Theta; m.theta = 1.0; }
    else if (id == "gauss4") m.kind = MethodKind::Gauss4;
    else throw DomainError("unknown method '" + id + "'");
    return m;
}

std::string Method::label() const
{
    const auto it = labels().find(id);
    return it == labels().end() ? id : it->second;
}

std::vector<std::string> known_method_ids()
{
    std::vector<std::string> out;
    for (const auto& [id, label] : labels()) out.push_back(id);
    return out;
}

std::unique_ptr<Stepper> make_stepper(const SecondOrderSystem& sys, const Method& m, double h,
                                      const NewtonConfig& cfg)
{
    switch (m.kind) {
    case MethodKind::TrBdf2: return std::make_unique<TrBdf2Stepper>(sys, h, cfg);
    case MethodKind::GAlpha: return std::make_unique<GAlphaStepper>(sys, h, m.galpha, cfg);
    case MethodKind::Bdf2: return std::make_unique<Bdf2Stepper>(sys, h, cfg);
    case MethodKind::Theta: return std::make_unique<ThetaStepper>(sys, h, m.theta, cfg);
    case MethodKind::Gauss4: return std::make_unique<Gauss4Stepper>(sys, h, cfg);
    }
    throw DomainError("make_stepper: unhandled method");
}

std::size_t step_count(double T, double h)
{
    if (!(T > 0.0) || !(h > 0.0) || !std::isfinite(T / h)) throw DomainError("integrate: T and h must be positive");
    return static_cast<std::size_t>(std::max<long long>(1, std::llround(T / h)));
}

Trajectory integrate(const SecondOrderSystem& sys, const Method& method, double T, double h,
                     const IntegrateOptions& opts)
{
    const std::size_t steps = step_count(T, h);
    sys.validate();
    for (std::size_t p : opts.probes)
        if (p >= sys.size()) throw DimensionError("integrate: probe index out of range");
    opts.newton.validate();

    Trajectory traj;
    traj.method = method.id;
    traj.h = h;
    if (opts.record == RecordMode::Probes) traj.probes = opts.probes;
    auto record = [&](const State& s) {
        if (opts.record == RecordMode::Probes) traj.states.push_back(restrict_state(s, opts.probes));
        else traj.states.push_back(s);
    };

    auto stepper = make_stepper(sys, method, h, opts.newton);
    State s{0.0, sys.u0, sys.v0};
    stepper->start(s);
    record(s);
    if (opts.observer) opts.observer(0, s);
    for (std::size_t n = 1; n <= steps; ++n) {
        try {
            s = stepper->step(s);
        } catch (const StepError&) {
            throw;
        } catch (const Error& e) {
            throw StepError(n, e.what());
        }
        s.t = static_cast<double>(n) * h;
        if (!all_finite(s.u) || !all_finite(s.w)) throw StepError(n, "non-finite state");
        if (opts.record != RecordMode::None || n == steps) record(s);
        if (opts.observer) opts.observer(n, s);
    }
    return traj;
}

} // namespace strudyn
