// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "strudyn/analysis/norms.hpp"
#include "strudyn/bench/experiments.hpp"
#include "strudyn/fem/assembly.hpp"
#include "strudyn/fem/mesh.hpp"
#include "strudyn/integrators/bdf2.hpp"
#include "strudyn/integrators/galpha.hpp"
#include "strudyn/integrators/gauss4.hpp"
#include "strudyn/integrators/modal.hpp"
#include "strudyn/integrators/newton.hpp"
#include "strudyn/integrators/theta.hpp"
#include "strudyn/integrators/trbdf2.hpp"
#include "strudyn/linalg/eigen.hpp"
#include "strudyn/linalg/factorization.hpp"
#include "strudyn/spectral/grid.hpp"
#include "strudyn/spectral/operators.hpp"

using namespace strudyn;

namespace {

std::mt19937_64 gen(20240611);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }

void note(const char* fmt, auto... args)
{
    std::printf("    ");
    std::printf(fmt, args...);
    std::printf("\n");
}

bool within_factor(double got, double want, double f) { return got <= f * want && got >= want / f; }

// Marks a failed sub-check and says which one.
bool check(bool ok, const std::string& what)
{
    if (!ok) note("failed: %s", what.c_str());
    return ok;
}

double max_rel(std::span<const double> got, std::span<const double> want)
{
    double m = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        m = std::max(m, std::abs(got[i] - want[i]) / std::max(1.0, std::abs(want[i])));
    return m;
}

// ---- 1, 2: 2D wave ----

bool criterion1()
{
    const std::vector<double> hs{0.1, 0.05, 0.025, 0.0125};
    const double table_l2[] = {1.26e-2, 2.78e-3, 6.39e-4, 1.52e-4};
    const double table_h1[] = {4.08e-2, 8.79e-3, 2.04e-3, 4.91e-4};
    bool ok = true;
    std::vector<ErrorReport> r;
    for (double h : hs) r.push_back(run_wave2d_level("trbdf2", h));
    for (std::size_t i = 0; i < hs.size(); ++i) {
        note("h=%-7g Linf(L2)=%.3e (table %.3e)  L2(H1)=%.3e (table %.3e)", hs[i], r[i].linf_l2, table_l2[i],
             r[i].l2_h1, table_h1[i]);
        ok &= check(within_factor(r[i].linf_l2, table_l2[i], 2.0), "Linf(L2) within 2x at h=" + std::to_string(hs[i]));
        ok &= check(within_factor(r[i].l2_h1, table_h1[i], 2.0), "L2(H1) within 2x at h=" + std::to_string(hs[i]));
        if (i == 0) continue;
        const double a = empirical_rate(r[i - 1].linf_l2, r[i].linf_l2, hs[i - 1], hs[i]);
        const double b = empirical_rate(r[i - 1].l2_h1, r[i].l2_h1, hs[i - 1], hs[i]);
        note("    rates %.3f %.3f", a, b);
        ok &= check(a >= 1.9 && a <= 2.3, "Linf(L2) rate in [1.9, 2.3]");
        ok &= check(b >= 1.9 && b <= 2.3, "L2(H1) rate in [1.9, 2.3]");
    }
    return ok;
}

bool criterion2()
{
    bool ok = true;
    for (double h : {0.025, 0.0125}) {
        const double bdf2 = run_wave2d_level("bdf2", h).linf_l2;
        const double nm = run_wave2d_level("newmark", h).linf_l2;
        const double tr = run_wave2d_level("trbdf2", h).linf_l2;
        note("h=%-7g BDF2 %.3e  Newmark %.3e  TR-BDF2 %.3e  Newmark/TR-BDF2 %.2f", h, bdf2, nm, tr, nm / tr);
        ok &= check(tr < nm && nm < bdf2, "ordering TR-BDF2 < Newmark < BDF2");
        ok &= check(nm >= 4.0 * tr, "Newmark >= 4x TR-BDF2");
    }
    return ok;
}

// ---- 3: stiff rod ----

bool criterion3()
{
    // T, then BDF2, Newmark, TR-BDF2 rows of (Linf(L2), L2(H1), Linf(Linf)).
    const double table[2][3][3] = {{{6.63e-2, 0.59, 2.50e-2}, {2.46e-2, 0.19, 6.99e-3}, {1.51e-2, 6.00e-2, 2.67e-3}},
                                   {{0.32, 2.20, 5.41e-2}, {0.15, 1.06, 2.51e-2}, {0.14, 0.92, 7.73e-3}}};
    const auto res = run_wave1d(Wave1dConfig{});
    if (!check(res.reports.size() == 6, "six table rows")) return false;
    bool ordinal = true, values = true;
    for (std::size_t t = 0; t < 2; ++t) {
        const ErrorReport* rows = &res.reports[3 * t];
        for (std::size_t m = 0; m < 3; ++m) {
            const double got[3] = {rows[m].linf_l2, rows[m].l2_h1, rows[m].linf_linf};
            note("T=%-4g %-8s %.3e (%.3e)  %.3e (%.3e)  %.3e (%.3e)", rows[m].T, rows[m].label.c_str(), got[0],
                 table[t][m][0], got[1], table[t][m][1], got[2], table[t][m][2]);
            for (int k = 0; k < 3; ++k) values &= within_factor(got[k], table[t][m][k], 2.0);
        }
        ordinal &= check(rows[2].linf_l2 < std::min(rows[0].linf_l2, rows[1].linf_l2), "TR-BDF2 smallest Linf(L2)");
        ordinal &= check(rows[2].l2_h1 < std::min(rows[0].l2_h1, rows[1].l2_h1), "TR-BDF2 smallest L2(H1)");
        ordinal &= check(rows[2].linf_linf < std::min(rows[0].linf_linf, rows[1].linf_linf),
                         "TR-BDF2 smallest Linf(Linf)");
    }
    const double ratio = res.reports[4].linf_linf / res.reports[5].linf_linf;
    note("T=2.5 Linf(Linf) Newmark/TR-BDF2 = %.3f", ratio);
    ordinal &= check(ratio >= 2.0, "Newmark/TR-BDF2 Linf(Linf) at T=2.5 >= 2");
    note("ordinal claims %s, values within 2x %s", ordinal ? "hold" : "fail", values ? "hold" : "fail");
    check(values, "every value within 2x of the table");
    return ordinal && values;
}

// ---- 4: spectral properties ----

std::vector<double> samples(double lo, double hi, std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return v;
}

bool criterion4()
{
    bool ok = true;
    double worst = 0.0;
    for (double z : samples(0.0, 1.0, 101))
        for (double w : samples(0.01, 10.0, 101)) worst = std::max(worst, spectral_radius(trbdf2_operator({z, w})));
    note("(a) max radius over [0,1]x[0.01,10] = %.17g", worst);
    ok &= check(worst <= 1.0 + 1e-12, "A-stability");

    const double r3 = spectral_radius(trbdf2_operator({0.0, 1e3}));
    const double r5 = spectral_radius(trbdf2_operator({0.0, 1e5}));
    note("(b) radius(1e3) = %.3e, radius(1e5) = %.3e", r3, r5);
    ok &= check(r3 < 0.1 && r5 < 0.01, "L-stability trend");

    const GridSpec c{.zeta_min = -0.5, .zeta_max = 0.0, .zeta_count = 51, .omega_min = 0.01, .omega_max = 1.0,
                     .omega_count = 100};
    const auto tr = relative_error_grid("trbdf2", c);
    const auto nm = relative_error_grid("newmark-r0", c);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < tr.values.size(); ++k) bad += !(tr.values[k] < nm.values[k]);
    note("(c) %zu of %zu points with TR-BDF2 relerr >= Newmark-r0", bad, tr.values.size());
    ok &= check(bad == 0, "TR-BDF2 below Newmark-r0 for omega <= 1, zeta in [-0.5, 0]");

    const GridSpec d;
    double asym = 0.0;
    for (const auto& m : spectral_methods()) {
        const auto ratio = norm_ratio_grid(m, d);
        const auto relerr = relative_error_grid(m, d);
        for (std::size_t i = 0; i < ratio.zeta.size(); ++i)
            for (std::size_t j = 0; j < ratio.omega.size(); ++j) {
                const OscillatorPoint q{ratio.zeta[i], -ratio.omega[j]};
                auto diff = [](double a, std::function<double()> f) {
                    double b;
                    try {
                        b = f();
                    } catch (const SingularMatrixError&) {
                        b = std::numeric_limits<double>::infinity();
                    }
                    return a == b ? 0.0 : std::abs(a - b);
                };
                asym = std::max(asym, diff(ratio.at(i, j), [&] { return norm_ratio(m, q); }));
                asym = std::max(asym, diff(relerr.at(i, j), [&] { return relative_error(m, q); }));
            }
    }
    note("(d) max |f(zeta, omega) - f(zeta, -omega)| = %.3e over %zu methods", asym, spectral_methods().size());
    ok &= check(asym <= 1e-12, "symmetry under omega -> -omega");
    return ok;
}

// ---- 5: operator / stepper equivalence ----

SecondOrderSystem oscillator_at(const OscillatorPoint& p, double h)
{
    return make_scalar_oscillator(1.0, 2.0 * p.zeta / h, p.stiffness() / (h * h), 0.0, 0.0);
}

bool criterion5()
{
    const double h = 0.1;
    std::vector<OscillatorPoint> pts;
    for (int i = 0; i < 20; ++i) pts.push_back({uniform(0.0, 1.0), uniform(1e-3, 10.0)});
    auto xy = [] { return Vector{uniform(-1, 1), uniform(-1, 1)}; };
    double worst = 0.0;
    std::string worst_method;
    auto record = [&](const std::string& m, double e) {
        if (e > worst) {
            worst = e;
            worst_method = m;
        }
    };
    for (const auto& p : pts) {
        const auto sys = oscillator_at(p, h);
        {
            auto ws = assemble_trbdf2(sys, h);
            const Vector x = xy();
            const State s = trbdf2_step(sys, State{0.0, {x[0]}, {x[1] / h}}, h, ws);
            record("trbdf2", max_rel(Vector{s.u[0], h * s.w[0]}, trbdf2_operator(p).apply(x)));
        }
        for (const char* id : {"newmark", "newmark-b13", "newmark-r0", "newmark-r025", "newmark-r05", "cha-r0",
                               "cha-r025", "cha-r05"}) {
            const auto params = Method::parse(id).galpha;
            GAlphaWorkspace ws(sys, h, params);
            const Vector x{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            const auto [s, a] = galpha_step(sys, State{0.0, {x[0]}, {x[1] / h}}, Vector{x[2] / (h * h)}, h, ws);
            record(id, max_rel(Vector{s.u[0], h * s.w[0], h * h * a[0]}, galpha_operator(p, params).apply(x)));
        }
        for (const auto& [id, theta] : {std::pair{"cn", 0.5}, std::pair{"theta051", 0.51}, std::pair{"ie", 1.0}}) {
            const Vector x = xy();
            const State s = theta_step(sys, State{0.0, {x[0]}, {x[1] / h}}, h, theta);
            record(id, max_rel(Vector{s.u[0], h * s.w[0]}, theta_operator(p, theta).apply(x)));
        }
        {
            Bdf2Workspace ws(sys, h);
            const Vector x{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            const State s = bdf2_step(sys, State{0.0, {x[2]}, {x[3] / h}}, State{h, {x[0]}, {x[1] / h}}, h, ws);
            const Vector want = bdf2_operator(p).apply(x);
            record("bdf2", max_rel(Vector{s.u[0], h * s.w[0]}, Vector{want[0], want[1]}));
        }
        {
            const Vector x = xy();
            const State s = gauss4_step(sys, State{0.0, {x[0]}, {x[1] / h}}, h, NewtonConfig{.atol = 1e-15});
            record("gauss4", max_rel(Vector{s.u[0], h * s.w[0]}, gauss4_operator(p).apply(x)));
        }
    }
    note("20 points, 14 integrators: max relative mismatch %.3e (%s)", worst, worst_method.c_str());
    return check(worst <= 1e-12, "one step matches the amplification matrix to 1e-12");
}

// ---- 6: order ----

double global_error(const std::string& method, double h)
{
    const double zt = 0.1, wt = 2.0;
    auto u = [&](double t) { return std::exp(-zt * t) * (std::cos(wt * t) + zt / wt * std::sin(wt * t)); };
    auto w = [&](double t) { return -std::exp(-zt * t) * (zt * zt + wt * wt) / wt * std::sin(wt * t); };
    const auto sys = make_scalar_oscillator(1.0, 2 * zt, zt * zt + wt * wt, 1.0, 0.0);
    double err = 0.0;
    IntegrateOptions opts;
    opts.record = RecordMode::None;
    opts.newton.atol = 1e-14;
    opts.observer = [&](std::size_t, const State& s) {
        err = std::max(err, std::hypot(s.u[0] - u(s.t), s.w[0] - w(s.t)));
    };
    integrate(sys, Method::parse(method), 5.0, h, opts);
    return err;
}

double fitted_slope(const std::string& method, const std::vector<double>& hs)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double h : hs) {
        const double x = std::log(h), y = std::log(global_error(method, h));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(hs.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool criterion6()
{
    struct Case {
        const char* id;
        std::vector<double> hs;
        double target, tol;
    };
    const std::vector<Case> cases{{"trbdf2", {0.025, 0.0125}, 2.0, 0.15},
                                  {"newmark", {0.025, 0.0125}, 2.0, 0.15},
                                  {"bdf2", {0.025, 0.0125}, 2.0, 0.15},
                                  {"cha-r025", {0.025, 0.0125}, 2.0, 0.15},
                                  {"ie", {0.0125, 0.00625, 0.003125, 0.0015625}, 1.0, 0.1},
                                  {"gauss4", {0.1, 0.05}, 4.0, 0.3}};
    bool ok = true;
    for (const auto& c : cases) {
        const double s = fitted_slope(c.id, c.hs);
        note("%-9s h %g..%g  slope %.3f (target %.1f +- %.2f)", c.id, c.hs.front(), c.hs.back(), s, c.target, c.tol);
        ok &= check(std::abs(s - c.target) <= c.tol, std::string(c.id) + " slope");
    }
    return ok;
}

// ---- 7: two-dof benchmark ----

bool criterion7()
{
    bool ok = true;
    TwoDofConfig cfg;
    std::vector<TwoDofRun> runs;
    try {
        runs = run_twodof(cfg);
    } catch (const Error& e) {
        note("run failed: %s", e.what());
        return check(false, "Newton converges for every implicit method at h=1e-3");
    }
    double tr = 0, nm = 0, ch = 0;
    for (const auto& r : runs) {
        note("%-13s h=1e-3 T=1  Linf y1 %.4e  y2 %.5e", r.method.c_str(), r.linf[0], r.linf[1]);
        if (r.method == "trbdf2") tr = r.linf[1];
        if (r.method == "newmark-r0") nm = r.linf[1];
        if (r.method == "cha-r0") ch = r.linf[1];
    }
    ok &= check(runs.size() == cfg.methods.size(), "all implicit methods ran");
    ok &= check(tr < nm && tr < ch, "TR-BDF2 y2 error below Newmark-r0 and CH-alpha-r0");

    TwoDofConfig fine;
    fine.T = 5e-3;
    fine.oracle_refinement = 20;
    fine.methods = {"trbdf2"};
    fine.newton.atol = 1e-15;
    fine.newton.rtol = 1e-14;
    std::vector<double> e;
    for (double h : {2.5e-6, 1.25e-6}) {
        fine.h = h;
        e.push_back(run_twodof(fine).front().linf[0]);
    }
    const double slope = empirical_rate(e[0], e[1], 2.5e-6, 1.25e-6);
    note("TR-BDF2 y1 Linf at T=5e-3: %.3e (h=2.5e-6), %.3e (h=1.25e-6), slope %.3f", e[0], e[1], slope);
    ok &= check(std::abs(slope - 2.0) <= 0.2, "TR-BDF2 slope 2.0 +- 0.2");
    return ok;
}

// ---- 8: elasticity ----

bool criterion8()
{
    const ElasticityConfig cfg;
    const auto prob = make_elasticity_problem(cfg);
    note("mesh: %zu nodes, %zu elements", prob.mesh.node_count(), prob.mesh.element_count());
    const auto res = run_elasticity(prob, cfg);
    bool ok = true;
    const MethodRun* cn = nullptr;
    const MethodRun* tr = nullptr;
    for (const auto& run : res.runs) {
        note("%-12s Linf(L2) rel: x %.3e  y %.3e  (%.1f s)", run.reports[0].label.c_str(), run.reports[0].linf_l2,
             run.reports[1].linf_l2, run.seconds);
        if (run.method == "cn") cn = &run;
        if (run.method == "trbdf2") tr = &run;
    }
    // cfg.methods lists implicit Euler, Newmark(1/3), CN, TR-BDF2: errors must decrease along it.
    for (std::size_t comp = 0; comp < 2; ++comp)
        for (std::size_t k = 1; k < res.runs.size(); ++k)
            ok &= check(res.runs[k].reports[comp].linf_l2 < res.runs[k - 1].reports[comp].linf_l2,
                        res.runs[k].method + " below " + res.runs[k - 1].method + " in component " +
                            res.runs[k].reports[comp].component);
    if (!cn || !tr) return check(false, "CN and TR-BDF2 runs present");
    const auto& pc = cn->reports[0].probes;
    const auto& pt = tr->reports[0].probes;
    for (std::size_t k = 0; k < pc.size(); ++k) {
        for (const auto& [what, a, b] : {std::tuple{"L2", pt[k].l2, pc[k].l2}, std::tuple{"Linf", pt[k].linf, pc[k].linf}}) {
            if (b <= 1e-9) {
                note("probe %-4s %-4s CN error %.1e is roundoff, not compared", pc[k].name.c_str(), what, b);
                continue;
            }
            note("probe %-4s %-4s TR-BDF2/CN = %.3f", pc[k].name.c_str(), what, a / b);
            ok &= check(a <= 0.6 * b, "probe " + pc[k].name + " " + what + " ratio <= 0.6");
        }
    }
    return ok;
}

// ---- 9: modal vs Gauss4 ----

bool criterion9()
{
    const auto rod = make_rod_problem(RodConfig{});
    const ModalSolution modal(rod.system);
    IntegrateOptions opts;
    opts.record = RecordMode::None;
    opts.newton.atol = 1e-15;
    const auto traj = integrate(rod.system, Method::parse("gauss4"), 1.0, 1e-5, opts);
    const State& g = traj.states.back();
    const State m = modal.at(g.t);
    const Vector d = sub(g.u, m.u);
    const double err = std::sqrt(dot(d, rod.problem.M.apply(d)));
    note("T=%g h=1e-5: ||u_gauss4 - u_modal||_M = %.4e", g.t, err);
    return check(err <= 1e-6, "agreement to 1e-6");
}

// ---- 10: invariant spot checks (the unit suites cover these in depth) ----

bool criterion10()
{
    bool ok = true;
    const auto c = TrBdf2Coefficients::l_stable();
    ok &= check(std::abs(c.gamma * c.gamma3 + c.gamma2 - 1.0) < 1e-15, "DIRK weights sum to 1");
    ok &= check(c.shares_matrix(), "gamma2 = gamma / 2 for the L-stable gamma");

    double det_err = 0.0;
    for (int i = 0; i < 50; ++i) {
        const OscillatorPoint p{uniform(-1.0, 1.0), uniform(0.01, 10.0)};
        const DenseMatrix e = exact_operator(p);
        const double det = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
        det_err = std::max(det_err, std::abs(det - std::exp(-2 * p.zeta)) / std::exp(-2 * p.zeta));
    }
    note("det E = exp(-2 zeta): max relative deviation %.2e", det_err);
    ok &= check(det_err < 1e-12, "det E");

    const Mesh sq = generate_square_mesh(1.0, 6, DiagonalPattern::Alternating);
    CoefficientField cf;
    cf.regions[0] = RegionCoefficients{1.0, 1.0, 1.7, 0.6};
    const SparseMatrix Ke = assemble_full_elasticity_stiffness(sq, cf);
    Vector lin(2 * sq.node_count()), rot(2 * sq.node_count());
    for (std::size_t i = 0; i < sq.node_count(); ++i) {
        lin[2 * i] = 0.3 * sq.nodes[i][0] - 0.8 * sq.nodes[i][1];
        lin[2 * i + 1] = 1.1 * sq.nodes[i][0] + 0.4 * sq.nodes[i][1];
        rot[2 * i] = -sq.nodes[i][1] + 1.0;
        rot[2 * i + 1] = sq.nodes[i][0];
    }
    const std::set<std::size_t> bnd(sq.boundary.begin(), sq.boundary.end());
    double patch = 0.0, kernel = 0.0;
    const Vector kl = Ke.apply(lin), kr = Ke.apply(rot);
    for (std::size_t i = 0; i < sq.node_count(); ++i) {
        kernel = std::max({kernel, std::abs(kr[2 * i]), std::abs(kr[2 * i + 1])});
        if (!bnd.count(i)) patch = std::max({patch, std::abs(kl[2 * i]), std::abs(kl[2 * i + 1])});
    }
    note("patch test residual %.2e, rigid-mode residual %.2e", patch, kernel);
    ok &= check(patch < 1e-12, "patch test");
    ok &= check(kernel < 1e-12, "rigid-mode kernel");

    const auto sys = make_scalar_oscillator(1.0, 0.2, 4.0, 1.0, 0.0);
    auto ws = assemble_trbdf2(sys, 0.01);
    std::vector<Vector> levels{sys.u0}, stages;
    std::vector<Vector> stored{sys.v0};
    State s{0.0, sys.u0, sys.v0};
    for (int n = 0; n < 1000; ++n) {
        s = trbdf2_step(sys, s, 0.01, ws);
        levels.push_back(s.u);
        stages.push_back(ws.stage_displacement());
        stored.push_back(s.w);
    }
    const auto rebuilt = recompute_velocities(levels, stages, sys.v0, 0.01);
    double vel = 0.0;
    for (std::size_t n = 0; n < stored.size(); ++n) vel = std::max(vel, std::abs(rebuilt[n][0] - stored[n][0]));
    note("velocity recomputation over 1000 steps: max deviation %.2e", vel);
    ok &= check(vel < 1e-12, "velocity recomputation");

    const Vector b{1.0, -2.0, 3.5};
    const auto nr = newton_solve([&](std::span<const double> x) { return sub(x, b); },
                                 [](std::span<const double> x) {
                                     return factorize(SparseMatrix::identity(x.size()), FactorKind::Spd);
                                 },
                                 Vector(3, 0.0), NewtonConfig{});
    ok &= check(nr.iterations == 1, "Newton takes one iteration on a linear residual");

    const Mesh inc = generate_inclusion_mesh(InclusionMeshSpec{.h_fine = 0.1, .h_coarse = 0.5});
    ok &= check(mesh_to_string(mesh_from_string(mesh_to_string(inc))) == mesh_to_string(inc), "mesh round-trip");
    note("coefficient identities, Newton, mesh round-trip: %s", ok ? "ok" : "see above");
    return ok;
}

} // namespace

int main()
{
    struct Entry {
        int id;
        const char* name;
        bool (*run)();
    };
    const Entry entries[] = {
        {1, "2D wave convergence table", criterion1},  {2, "2D wave method ordering", criterion2},
        {3, "stiff rod table", criterion3},            {4, "spectral properties", criterion4},
        {5, "operator/stepper equivalence", criterion5}, {6, "order of accuracy", criterion6},
        {7, "two-dof benchmark", criterion7},          {8, "elasticity with inclusion", criterion8},
        {9, "modal vs Gauss4 oracle", criterion9},     {10, "invariant spot checks", criterion10},
    };
    std::vector<std::string> summary;
    int failed = 0;
    for (const auto& e : entries) {
        std::printf("criterion %d (%s)\n", e.id, e.name);
        std::fflush(stdout);
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = e.run();
        } catch (const std::exception& ex) {
            note("exception: %s", ex.what());
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char line[160];
        std::snprintf(line, sizeof line, "criterion %2d: %s  %s (%.1f s)", e.id, ok ? "PASS" : "FAIL", e.name, sec);
        std::printf("%s\n\n", line);
        std::fflush(stdout);
        summary.push_back(line);
        failed += !ok;
    }
    std::printf("summary\n");
    for (const auto& s : summary) std::printf("%s\n", s.c_str());
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
