#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "strudyn/analysis/report.hpp"
#include "strudyn/bench/experiments.hpp"
#include "strudyn/spectral/grid.hpp"

namespace strudyn::cli {

namespace fs = std::filesystem;

std::vector<std::string> split_list(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw DomainError("empty item in list '" + s + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    if (out.empty()) throw DomainError("empty list");
    return out;
}

namespace {

double to_number(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw DomainError("not a number: '" + s + "'");
    return v;
}

} // namespace

std::vector<double> parse_numbers(const std::string& s)
{
    std::vector<double> out;
    for (const std::string& item : split_list(s)) out.push_back(to_number(item));
    return out;
}

std::pair<double, double> parse_range(const std::string& s)
{
    const auto parts = split_list(s, ':');
    if (parts.size() != 2) throw DomainError("expected lo:hi, got '" + s + "'");
    const double lo = to_number(parts[0]);
    const double hi = to_number(parts[1]);
    if (!(lo < hi)) throw DomainError("range '" + s + "' is empty");
    return {lo, hi};
}

std::vector<Point> parse_points(const std::string& s)
{
    std::vector<Point> out;
    for (const std::string& item : split_list(s, ';')) {
        const auto xy = parse_numbers(item);
        if (xy.size() != 2) throw DomainError("probe '" + item + "' must be x,y");
        out.push_back({xy[0], xy[1]});
    }
    return out;
}

std::vector<std::string> read_config_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is) throw IoError("cannot read config file " + path);
    std::vector<std::string> tokens;
    std::string line;
    std::size_t n = 0;
    while (std::getline(is, line)) {
        ++n;
        line = line.substr(0, line.find('#'));
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(n, "expected key=value");
        auto trim = [](std::string t) {
            const auto l = t.find_first_not_of(" \t\r");
            const auto r = t.find_last_not_of(" \t\r");
            return l == std::string::npos ? std::string() : t.substr(l, r - l + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ParseError(n, "empty key or value");
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

namespace {

struct Common {
    std::string out = "out";
    std::string methods;
};

void write(const fs::path& dir, const std::string& name, const std::string& content)
{
    write_file_atomic(dir / name, content);
}

std::vector<std::string> methods_or(const std::string& given, std::vector<std::string> fallback)
{
    if (given.empty()) return fallback;
    auto ids = split_list(given);
    for (const std::string& id : ids) Method::parse(id);
    return ids;
}

std::string fmt(double v) { return full_precision(v); }

// ---- spectral ----

struct SpectralOpts {
    std::string zeta = "-1:0";
    std::string omega = "0.01:10";
    std::size_t samples = 101;
    std::string galpha_form = "reduced";
};

void cmd_spectral(const Common& c, const SpectralOpts& o, std::ostream& out)
{
    GridSpec spec;
    std::tie(spec.zeta_min, spec.zeta_max) = parse_range(o.zeta);
    std::tie(spec.omega_min, spec.omega_max) = parse_range(o.omega);
    spec.zeta_count = spec.omega_count = o.samples;
    spec.galpha_form = parse_galpha_form(o.galpha_form);
    spec.validate();
    const auto methods =
        methods_or(c.methods, {"trbdf2", "newmark-r0", "newmark-r025", "newmark-r05", "cha-r0", "cha-r025"});
    for (const std::string& m : methods) {
        const auto known = spectral_methods();
        if (std::find(known.begin(), known.end(), m) == known.end())
            throw DomainError("method '" + m + "' has no amplification operator");
    }
    Table summary{{"method", "max_ratio", "max_relerr"}, {}};
    for (const std::string& m : methods) {
        const OperatorGrid ratio = norm_ratio_grid(m, spec);
        const OperatorGrid relerr = relative_error_grid(m, spec);
        std::ostringstream a, b;
        ratio.write_csv(a);
        relerr.write_csv(b);
        write(c.out, "ratio_" + m + ".csv", a.str());
        write(c.out, "relerr_" + m + ".csv", b.str());
        summary.add_row({m, three_digits(*std::max_element(ratio.values.begin(), ratio.values.end())),
                         three_digits(*std::max_element(relerr.values.begin(), relerr.values.end()))});
    }
    out << summary.aligned();
}

// ---- twodof ----

struct TwoDofOpts {
    double h = 1e-3;
    double T = 1.0;
    int oracle_refinement = 100;
    int max_newton = 60;
};

void cmd_twodof(const Common& c, const TwoDofOpts& o, std::ostream& out)
{
    TwoDofConfig cfg;
    cfg.h = o.h;
    cfg.T = o.T;
    cfg.oracle_refinement = o.oracle_refinement;
    cfg.newton.max_iterations = o.max_newton;
    cfg.methods = methods_or(c.methods, cfg.methods);
    if (!(cfg.h > 0.0) || !(cfg.T > 0.0)) throw DomainError("twodof: dt and T must be positive");
    const auto runs = run_twodof(cfg);
    Table full{{"method", "label", "h", "T", "linf_y1", "linf_y2", "linf_v1", "linf_v2"}, {}};
    Table shown = full;
    for (const TwoDofRun& r : runs) {
        std::ostringstream os;
        os << "t,err_y1,err_y2,err_v1,err_v2\n";
        for (std::size_t n = 0; n < r.t.size(); ++n)
            os << fmt(r.t[n]) << ',' << fmt(r.errors[n][0]) << ',' << fmt(r.errors[n][1]) << ','
               << fmt(r.errors[n][2]) << ',' << fmt(r.errors[n][3]) << '\n';
        write(c.out, "errors_" + r.method + ".csv", os.str());
        const std::string label = Method::parse(r.method).label();
        full.add_row({r.method, label, fmt(cfg.h), fmt(r.t.back()), fmt(r.linf[0]), fmt(r.linf[1]), fmt(r.linf[2]),
                      fmt(r.linf[3])});
        shown.add_row({r.method, label, three_digits(cfg.h), three_digits(r.t.back()), three_digits(r.linf[0]),
                       three_digits(r.linf[1]), three_digits(r.linf[2]), three_digits(r.linf[3])});
    }
    write(c.out, "summary.csv", full.csv());
    write(c.out, "summary.txt", shown.aligned());
    out << shown.aligned();
}

// ---- wave1d ----

struct Wave1dOpts {
    double dt = 0.025;
    std::string T = "1,2.5";
    std::size_t nodes = 21;
};

void cmd_wave1d(const Common& c, const Wave1dOpts& o, std::ostream& out)
{
    Wave1dConfig cfg;
    cfg.dt = o.dt;
    cfg.end_times = parse_numbers(o.T);
    cfg.rod.nodes = o.nodes;
    cfg.methods = methods_or(c.methods, cfg.methods);
    if (!(cfg.dt > 0.0)) throw DomainError("wave1d: dt must be positive");
    for (double T : cfg.end_times)
        if (!(T > 0.0)) throw DomainError("wave1d: end times must be positive");
    if (cfg.rod.nodes < 2) throw DomainError("wave1d: need at least 2 nodes");
    const Wave1dResult res = run_wave1d(cfg);

    Table full{{"T", "method", "label", "dt", "linf_l2", "l2_h1", "linf_linf"}, {}};
    Table shown{{"T", "Method", "Error Linf(L2)", "Error L2(H1)", "Error Linf(Linf)"}, {}};
    for (const ErrorReport& r : res.reports) {
        full.add_row({fmt(r.T), r.method, r.label, fmt(r.dt), fmt(r.linf_l2), fmt(r.l2_h1), fmt(r.linf_linf)});
        shown.add_row({three_digits(r.T), r.label, three_digits(r.linf_l2), three_digits(r.l2_h1),
                       three_digits(r.linf_linf)});
    }
    write(c.out, "table.csv", full.csv());
    write(c.out, "table.txt", shown.aligned());
    for (const MethodRun& run : res.runs) {
        std::ostringstream os;
        os << "t,u,w,u_exact,w_exact,err_u,err_w\n";
        for (std::size_t n = 0; n < run.probe_series.size(); ++n) {
            const double u = run.probe_series[n][0];
            const double w = run.velocity_series[n][0];
            os << fmt(static_cast<double>(n) * cfg.dt) << ',' << fmt(u) << ',' << fmt(w) << ',' << fmt(res.exact_u[n])
               << ',' << fmt(res.exact_w[n]) << ',' << fmt(std::abs(u - res.exact_u[n])) << ','
               << fmt(std::abs(w - res.exact_w[n])) << '\n';
        }
        write(c.out, "tip_" + run.method + ".csv", os.str());
    }
    out << shown.aligned();
}

// ---- wave2d ----

struct Wave2dOpts {
    std::string ladder = "0.1,0.05,0.025,0.0125,0.00625,0.003125";
    std::size_t levels = 0;
    std::string comparison = "0.025,0.0125";
    std::string sizing = "side";
    double T = 1.0;
};

void cmd_wave2d(const Common& c, const Wave2dOpts& o, std::ostream& out)
{
    Wave2dConfig cfg;
    cfg.ladder = parse_numbers(o.ladder);
    if (o.levels > 0 && o.levels < cfg.ladder.size()) cfg.ladder.resize(o.levels);
    cfg.comparison_levels = o.comparison == "none" ? std::vector<double>{} : parse_numbers(o.comparison);
    cfg.comparison_methods = methods_or(c.methods, cfg.comparison_methods);
    cfg.sizing = parse_square_sizing(o.sizing);
    cfg.T = o.T;
    for (double h : cfg.ladder)
        if (!(h > 0.0)) throw DomainError("wave2d: ladder entries must be positive");
    for (double h : cfg.comparison_levels)
        if (!(h > 0.0)) throw DomainError("wave2d: comparison levels must be positive");
    if (!(cfg.T > 0.0)) throw DomainError("wave2d: T must be positive");
    const Wave2dResult res = run_wave2d(cfg);

    Table full{{"h", "dt", "cells", "linf_l2", "l2_h1", "rate_linf_l2", "rate_l2_h1"}, {}};
    Table shown{{"h=dt", "Linf(L2) error", "L2(H1) error", "r_emp Linf(L2)", "r_emp L2(H1)"}, {}};
    for (const Wave2dLevel& l : res.ladder) {
        full.add_row({fmt(l.report.h), fmt(l.report.dt), std::to_string(l.cells), fmt(l.report.linf_l2),
                      fmt(l.report.l2_h1), fmt(l.rate_l2), fmt(l.rate_h1)});
        const bool first = std::isnan(l.rate_l2);
        shown.add_row({three_digits(l.report.h), three_digits(l.report.linf_l2), three_digits(l.report.l2_h1),
                       first ? "" : three_digits(l.rate_l2), first ? "" : three_digits(l.rate_h1)});
    }
    write(c.out, "convergence.csv", full.csv());
    write(c.out, "convergence.txt", shown.aligned());
    out << shown.aligned();
    if (!res.comparison.empty()) {
        Table cf{{"h", "method", "label", "linf_l2", "l2_h1", "linf_linf"}, {}};
        Table cs{{"h=dt", "Method", "Linf(L2) error", "L2(H1) error"}, {}};
        for (const ErrorReport& r : res.comparison) {
            cf.add_row({fmt(r.h), r.method, r.label, fmt(r.linf_l2), fmt(r.l2_h1), fmt(r.linf_linf)});
            cs.add_row({three_digits(r.h), r.label, three_digits(r.linf_l2), three_digits(r.l2_h1)});
        }
        write(c.out, "comparison.csv", cf.csv());
        write(c.out, "comparison.txt", cs.aligned());
        out << '\n' << cs.aligned();
    }
}

// ---- elasticity2d ----

struct ElasticityOpts {
    double dt = 1.25e-4;
    double T = 1e-2;
    std::string mesh_file;
    std::string probes;
    double h_fine = 0.024;
    double h_coarse = 0.22;
    std::string reference = "gauss4";
};

std::string snapshot_csv(const Mesh& mesh, const AssembledProblem& prob, const State& s)
{
    const Vector full = prob.expand(s.u);
    std::ostringstream os;
    os << "x,y,dx,dy\n";
    for (std::size_t i = 0; i < mesh.node_count(); ++i)
        os << fmt(mesh.nodes[i][0]) << ',' << fmt(mesh.nodes[i][1]) << ',' << fmt(full[2 * i]) << ','
           << fmt(full[2 * i + 1]) << '\n';
    return os.str();
}

std::string series_csv(const std::vector<std::vector<double>>& series, const std::vector<std::string>& names,
                       double dt)
{
    std::ostringstream os;
    os << 't';
    for (const std::string& n : names) os << ',' << n;
    os << '\n';
    for (std::size_t k = 0; k < series.size(); ++k) {
        os << fmt(static_cast<double>(k) * dt);
        for (double v : series[k]) os << ',' << fmt(v);
        os << '\n';
    }
    return os.str();
}

void cmd_elasticity(const Common& c, const ElasticityOpts& o, std::ostream& out)
{
    ElasticityConfig cfg;
    cfg.dt = o.dt;
    cfg.T = o.T;
    cfg.mesh.h_fine = o.h_fine;
    cfg.mesh.h_coarse = o.h_coarse;
    cfg.reference_method = o.reference;
    Method::parse(cfg.reference_method);
    cfg.methods = methods_or(c.methods, cfg.methods);
    if (!(cfg.dt > 0.0) || !(cfg.T > 0.0)) throw DomainError("elasticity2d: dt and T must be positive");
    if (!o.probes.empty()) {
        cfg.probes.clear();
        const auto pts = parse_points(o.probes);
        for (std::size_t k = 0; k < pts.size(); ++k)
            cfg.probes.emplace_back(k < 26 ? std::string(1, static_cast<char>('A' + k)) : "P" + std::to_string(k),
                                    pts[k]);
    }
    Mesh file_mesh;
    if (!o.mesh_file.empty()) {
        std::ifstream is(o.mesh_file);
        if (!is) throw IoError("cannot read mesh file " + o.mesh_file);
        file_mesh = read_mesh(is);
    }
    const ElasticityProblem ep = make_elasticity_problem(cfg, o.mesh_file.empty() ? nullptr : &file_mesh);
    const ElasticityResult res = run_elasticity(ep, cfg);
    const fs::path dir = c.out;

    write(dir, "mesh.txt", mesh_to_string(ep.mesh));
    Table cf{{"region", "c_p", "mean_diameter", "courant"}, {}};
    Table cs = cf;
    for (const CourantReport& r : res.courant) {
        cf.add_row({std::to_string(r.region), fmt(r.c_p), fmt(r.h), fmt(r.courant)});
        cs.add_row({std::to_string(r.region), three_digits(r.c_p), three_digits(r.h), three_digits(r.courant)});
    }
    write(dir, "courant.csv", cf.csv());
    write(dir, "courant.txt", cs.aligned());
    out << "nodes " << ep.mesh.node_count() << ", elements " << ep.mesh.element_count() << ", unknowns "
        << ep.problem.size() << "\n" << cs.aligned() << '\n';

    Table ef{{"method", "label", "component", "linf_l2", "l2_h1", "linf_linf"}, {}};
    std::map<std::string, Table> shown;
    for (const std::string comp : {"x", "y"})
        shown[comp] = Table{{"Method", "Error Linf(L2)", "Error L2(H1)"}, {}};
    for (const MethodRun& run : res.runs)
        for (const ErrorReport& r : run.reports) {
            ef.add_row({r.method, r.label, r.component, fmt(r.linf_l2), fmt(r.l2_h1), fmt(r.linf_linf)});
            shown[r.component].add_row({r.label, three_digits(r.linf_l2), three_digits(r.l2_h1)});
        }
    write(dir, "errors.csv", ef.csv());
    for (const auto& [comp, t] : shown) {
        write(dir, "errors_" + comp + ".txt", t.aligned());
        out << "relative errors, " << comp << " displacement\n" << t.aligned() << '\n';
    }

    std::vector<std::string> names;
    for (const auto& [name, p] : cfg.probes) {
        names.push_back(name + "_x");
        names.push_back(name + "_y");
    }
    Table pf{{"method", "label", "probe", "l2", "linf"}, {}};
    for (std::size_t k = 0; k < cfg.probes.size(); ++k) {
        const std::string& pname = cfg.probes[k].first;
        Table t{{"Method", "L2 error dx", "Linf error dx", "L2 error dy", "Linf error dy"}, {}};
        for (const MethodRun& run : res.runs) {
            const auto& pe = run.reports.front().probes;
            t.add_row({run.reports.front().label, three_digits(pe[2 * k].l2), three_digits(pe[2 * k].linf),
                       three_digits(pe[2 * k + 1].l2), three_digits(pe[2 * k + 1].linf)});
            for (std::size_t j = 2 * k; j < 2 * k + 2; ++j)
                pf.add_row({run.method, run.reports.front().label, pe[j].name, fmt(pe[j].l2), fmt(pe[j].linf)});
        }
        write(dir, "probe_" + pname + ".txt", t.aligned());
        out << "probe " << pname << " (" << three_digits(cfg.probes[k].second[0]) << ", "
            << three_digits(cfg.probes[k].second[1]) << ")\n" << t.aligned() << '\n';
    }
    write(dir, "probe_errors.csv", pf.csv());
    write(dir, "probes_reference.csv", series_csv(res.reference_probes, names, cfg.dt));
    for (const MethodRun& run : res.runs) write(dir, "probes_" + run.method + ".csv", series_csv(run.probe_series, names, cfg.dt));

    auto dump = [&](const std::string& who, const std::vector<State>& snaps) {
        for (std::size_t k = 0; k < snaps.size(); ++k) {
            char t[32];
            std::snprintf(t, sizeof t, "%.6g", snaps[k].t);
            write(dir / "snapshots", who + "_t" + t + ".csv", snapshot_csv(ep.mesh, ep.problem, snaps[k]));
        }
    };
    dump("reference", res.reference_snapshots);
    for (const MethodRun& run : res.runs) dump(run.method, run.snapshots);
}

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--out", c.out, "Output directory")->capture_default_str();
    sub->add_option("--methods", c.methods, "Comma-separated method ids");
    sub->add_option("--config", "key=value file; command-line flags take precedence");
}

std::vector<std::string> expand_config(const std::vector<std::string>& args)
{
    // Config tokens go right after the subcommand so later flags override them.
    std::vector<std::string> rest;
    std::vector<std::string> from_file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config", 1, 0);
            from_file = read_config_file(args[++i]);
        } else if (a.rfind("--config=", 0) == 0) {
            from_file = read_config_file(a.substr(9));
        } else {
            rest.push_back(a);
        }
    }
    if (from_file.empty() || rest.empty() || rest.front().rfind("-", 0) == 0) return rest;
    std::vector<std::string> out{rest.front()};
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), rest.begin() + 1, rest.end());
    return out;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Time-integration benchmarks for second-order structural dynamics", "strudyn"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    Common common;
    SpectralOpts sp;
    TwoDofOpts td;
    Wave1dOpts w1;
    Wave2dOpts w2;
    ElasticityOpts el;

    auto* spectral = app.add_subcommand("spectral", "Amplification-operator grids");
    add_common(spectral, common);
    spectral->add_option("--zeta", sp.zeta, "Damping range lo:hi")->capture_default_str();
    spectral->add_option("--omega", sp.omega, "Frequency range lo:hi")->capture_default_str();
    spectral->add_option("--samples", sp.samples, "Samples per axis")->capture_default_str();
    spectral->add_option("--galpha-form", sp.galpha_form, "reduced or augmented")->capture_default_str();

    auto* twodof = app.add_subcommand("twodof", "Nonlinear two-dof problem against a fine Gauss4 oracle");
    add_common(twodof, common);
    twodof->add_option("--dt", td.h, "Time step")->capture_default_str();
    twodof->add_option("--T", td.T, "End time")->capture_default_str();
    twodof->add_option("--oracle-refinement", td.oracle_refinement, "Oracle step is dt / this")->capture_default_str();
    twodof->add_option("--max-newton", td.max_newton, "Newton iteration cap")->capture_default_str();

    auto* wave1d = app.add_subcommand("wave1d", "Stiff clamped-free rod against the modal solution");
    add_common(wave1d, common);
    wave1d->add_option("--dt", w1.dt, "Time step")->capture_default_str();
    wave1d->add_option("--T", w1.T, "Comma-separated end times")->capture_default_str();
    wave1d->add_option("--nodes", w1.nodes, "Mesh nodes")->capture_default_str();

    auto* wave2d = app.add_subcommand("wave2d", "Unit-square wave equation against the analytic solution");
    add_common(wave2d, common);
    wave2d->add_option("--ladder", w2.ladder, "Comma-separated h = dt values")->capture_default_str();
    wave2d->add_option("--levels", w2.levels, "Keep only the first N ladder levels (0 = all)");
    wave2d->add_option("--comparison", w2.comparison, "Levels of the method comparison, or none")
        ->capture_default_str();
    wave2d->add_option("--sizing", w2.sizing, "side: cell side = h; diameter: element diameter <= h")
        ->capture_default_str();
    wave2d->add_option("--T", w2.T, "End time")->capture_default_str();

    auto* elasticity = app.add_subcommand("elasticity2d", "Plane-strain waves around a stiff inclusion");
    add_common(elasticity, common);
    elasticity->add_option("--dt", el.dt, "Time step")->capture_default_str();
    elasticity->add_option("--T", el.T, "End time")->capture_default_str();
    elasticity->add_option("--mesh-file", el.mesh_file, "Mesh to use instead of the generated one");
    elasticity->add_option("--probes", el.probes, "Probe points \"x1,y1;x2,y2\"");
    elasticity->add_option("--h-fine", el.h_fine, "Element diameter near the inclusion")->capture_default_str();
    elasticity->add_option("--h-coarse", el.h_coarse, "Element diameter far from the inclusion")
        ->capture_default_str();
    elasticity->add_option("--reference", el.reference, "Reference method")->capture_default_str();

    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (spectral->parsed()) cmd_spectral(common, sp, out);
        if (twodof->parsed()) cmd_twodof(common, td, out);
        if (wave1d->parsed()) cmd_wave1d(common, w1, out);
        if (wave2d->parsed()) cmd_wave2d(common, w2, out);
        if (elasticity->parsed()) cmd_elasticity(common, el, out);
    } catch (const DomainError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ParseError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kConfigError;
    } catch (const fs::filesystem_error& e) {
        err << "i/o error: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalError;
    }
    return kOk;
}

} // namespace strudyn::cli
