#include "strudyn/spectral/grid.hpp"

#include <cstdio>
#include <functional>
#include <limits>

#include "strudyn/integrators/integrate.hpp"
#include "strudyn/linalg/eigen.hpp"

namespace strudyn {

GAlphaForm parse_galpha_form(const std::string& s)
{
    if (s == "reduced") return GAlphaForm::Reduced;
    if (s == "augmented") return GAlphaForm::Augmented;
    throw DomainError("unknown G-alpha comparison form '" + s + "' (expected reduced or augmented)");
}

void GridSpec::validate() const
{
    if (zeta_count < 1 || omega_count < 1) throw DomainError("GridSpec: counts must be positive");
    if (!(zeta_max >= zeta_min) || !(omega_max >= omega_min)) throw DomainError("GridSpec: empty range");
    if (omega_min <= 0.0 && omega_max >= 0.0) throw DomainError("GridSpec: omega range must exclude 0");
}

void OperatorGrid::write_csv(std::ostream& os) const
{
    os << "zeta,omega,value\n";
    char buf[96];
    for (std::size_t i = 0; i < zeta.size(); ++i)
        for (std::size_t j = 0; j < omega.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", zeta[i], omega[j], at(i, j));
            os << buf;
        }
}

const std::vector<std::string>& spectral_methods()
{
    static const std::vector<std::string> m = {"trbdf2", "newmark-r0", "newmark-r025", "newmark-r05", "cha-r0",
                                               "cha-r025", "cha-r05", "newmark", "newmark-b13", "cn",
                                               "theta051", "ie", "gauss4"};
    return m;
}

OperatorPair operator_pair(const std::string& method, const OscillatorPoint& p, GAlphaForm form)
{
    const Method m = Method::parse(method);
    switch (m.kind) {
    case MethodKind::TrBdf2: return {trbdf2_operator(p), exact_operator(p)};
    case MethodKind::Theta: return {theta_operator(p, m.theta), exact_operator(p)};
    case MethodKind::Gauss4: return {gauss4_operator(p), exact_operator(p)};
    case MethodKind::GAlpha:
        if (form == GAlphaForm::Augmented) return {galpha_operator(p, m.galpha), exact_augmented_operator(p)};
        return {galpha_reduced_operator(p, m.galpha), exact_operator(p)};
    case MethodKind::Bdf2: break;
    }
    throw DomainError("no one-step operator comparison for method '" + method + "'");
}

double norm_ratio(const std::string& method, const OscillatorPoint& p, GAlphaForm form)
{
    const OperatorPair op = operator_pair(method, p, form);
    return spectral_norm(op.discrete) / spectral_norm(op.exact);
}

double relative_error(const std::string& method, const OscillatorPoint& p, GAlphaForm form)
{
    const OperatorPair op = operator_pair(method, p, form);
    return spectral_norm(op.discrete - op.exact) / spectral_norm(op.exact);
}

namespace {

std::vector<double> samples(double lo, double hi, std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return v;
}

OperatorGrid evaluate(const std::string& method, const GridSpec& spec,
                      const std::function<double(const std::string&, const OscillatorPoint&, GAlphaForm)>& f)
{
    spec.validate();
    OperatorGrid g;
    g.method = method;
    g.zeta = samples(spec.zeta_min, spec.zeta_max, spec.zeta_count);
    g.omega = samples(spec.omega_min, spec.omega_max, spec.omega_count);
    g.values.reserve(g.zeta.size() * g.omega.size());
    for (double z : g.zeta)
        for (double w : g.omega) {
            double v;
            try {
                v = f(method, OscillatorPoint{z, w}, spec.galpha_form);
            } catch (const SingularMatrixError&) {
                v = std::numeric_limits<double>::infinity();
            }
            g.values.push_back(v);
        }
    return g;
}

} // namespace

OperatorGrid norm_ratio_grid(const std::string& method, const GridSpec& spec)
{
    return evaluate(method, spec, norm_ratio);
}

OperatorGrid relative_error_grid(const std::string& method, const GridSpec& spec)
{
    return evaluate(method, spec, relative_error);
}

} // namespace strudyn
