#include "strudyn/spectral/operators.hpp"

#include "strudyn/integrators/trbdf2.hpp"

namespace strudyn {

namespace {

void check_point(const OscillatorPoint& p, const char* where)
{
    if (!std::isfinite(p.zeta) || !std::isfinite(p.omega)) throw DomainError(std::string(where) + ": non-finite point");
    if (std::abs(p.omega) <= 1e-12) throw DomainError(std::string(where) + ": omega must be nonzero");
}

DenseMatrix scaled_jacobian(const OscillatorPoint& p)
{
    return DenseMatrix{{0.0, 1.0}, {-p.stiffness(), -p.damping()}};
}

DenseMatrix solve_checked(const DenseMatrix& left, const DenseMatrix& right, const OscillatorPoint& p,
                          const char* where)
{
    try {
        return inverse(left) * right;
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError(std::string(where) + ": singular matrix at zeta=" + std::to_string(p.zeta) +
                                  ", omega=" + std::to_string(p.omega));
    }
}

} // namespace

DenseMatrix exact_operator(const OscillatorPoint& p)
{
    check_point(p, "exact_operator");
    const double z = p.zeta;
    const double w = p.omega;
    const double e = std::exp(-z);
    const double c = std::cos(w);
    const double s = std::sin(w) / w;
    return DenseMatrix{{(c + z * s) * e, s * e}, {-(z * z + w * w) * s * e, (c - z * s) * e}};
}

DenseMatrix exact_augmented_operator(const OscillatorPoint& p)
{
    const DenseMatrix e = exact_operator(p);
    DenseMatrix out(3, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out(i, j) = e(i, j);
    for (std::size_t j = 0; j < 2; ++j) out(2, j) = -p.stiffness() * e(0, j) - p.damping() * e(1, j);
    return out;
}

DenseMatrix trbdf2_operator(const OscillatorPoint& p, double gamma)
{
    check_point(p, "trbdf2_operator");
    const auto k = TrBdf2Coefficients::from_gamma(gamma);
    const double g = k.gamma;
    const double g2 = k.gamma2;
    const double g3 = k.gamma3;
    const double kh = p.stiffness();
    const double z = p.zeta;

    const DenseMatrix s1{{1.0 + g * z + kh * g * g / 4.0, 0.0}, {1.0, -g / 2.0}};
    const DenseMatrix t1{{1.0 + g * z - kh * g * g / 4.0, g}, {1.0, g / 2.0}};
    const double d2 = 1.0 + 2.0 * g2 * z;
    const DenseMatrix s2{{d2 + kh * g2 * g2, 0.0}, {1.0, -g2}};
    const DenseMatrix t2{{g3 * d2, g2 * g3}, {g3, 0.0}};
    const DenseMatrix u2{{(1.0 - g3) * d2, g2 * (1.0 - g3)}, {1.0 - g3, 0.0}};

    const DenseMatrix stage = solve_checked(s1, t1, p, "trbdf2_operator");
    return solve_checked(s2, t2 * stage + u2, p, "trbdf2_operator");
}

DenseMatrix galpha_operator(const OscillatorPoint& p, const GAlphaParameters& a)
{
    check_point(p, "galpha_operator");
    const double kh = p.stiffness();
    const double ch = p.damping();
    const DenseMatrix left{{1.0, 0.0, -a.beta},
                           {0.0, 1.0, -a.gammaN},
                           {(1.0 - a.alphaF) * kh, (1.0 - a.alphaF) * ch, 1.0 - a.alphaM}};
    const DenseMatrix right{{1.0, 1.0, 0.5 - a.beta},
                            {0.0, 1.0, 1.0 - a.gammaN},
                            {-a.alphaF * kh, -a.alphaF * ch, -a.alphaM}};
    return solve_checked(left, right, p, "galpha_operator");
}

DenseMatrix galpha_reduced_operator(const OscillatorPoint& p, const GAlphaParameters& params)
{
    const DenseMatrix d = galpha_operator(p, params);
    DenseMatrix out(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        out(i, 0) = d(i, 0) - p.stiffness() * d(i, 2);
        out(i, 1) = d(i, 1) - p.damping() * d(i, 2);
    }
    return out;
}

DenseMatrix theta_operator(const OscillatorPoint& p, double theta)
{
    check_point(p, "theta_operator");
    if (!(theta >= 0.5 && theta <= 1.0)) throw DomainError("theta_operator: theta must lie in [1/2, 1]");
    const double kh = p.stiffness();
    const double ch = p.damping();
    const double e = 1.0 - theta;
    const DenseMatrix left{{1.0, -theta}, {theta * kh, 1.0 + theta * ch}};
    const DenseMatrix right{{1.0, e}, {-e * kh, 1.0 - e * ch}};
    return solve_checked(left, right, p, "theta_operator");
}

DenseMatrix bdf2_operator(const OscillatorPoint& p)
{
    check_point(p, "bdf2_operator");
    const DenseMatrix pinv = inverse(DenseMatrix::identity(2) - (2.0 / 3.0) * scaled_jacobian(p));
    DenseMatrix out(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = 4.0 / 3.0 * pinv(i, j);
            out(i, j + 2) = -1.0 / 3.0 * pinv(i, j);
        }
        out(i + 2, i) = 1.0;
    }
    return out;
}

DenseMatrix gauss4_operator(const OscillatorPoint& p)
{
    check_point(p, "gauss4_operator");
    const DenseMatrix j = scaled_jacobian(p);
    const DenseMatrix j2 = (1.0 / 12.0) * (j * j);
    const DenseMatrix id = DenseMatrix::identity(2);
    return solve_checked(id - 0.5 * j + j2, id + 0.5 * j + j2, p, "gauss4_operator");
}

DenseMatrix energy_scaled(const DenseMatrix& d, const OscillatorPoint& p)
{
    if (d.rows() != 2 || d.cols() != 2) throw DimensionError("energy_scaled: expects a 2x2 operator");
    const double s = std::sqrt(p.stiffness());
    if (!(s > 0.0)) throw DomainError("energy_scaled: stiffness must be positive");
    DenseMatrix out = d;
    out(0, 1) *= s;
    out(1, 0) /= s;
    return out;
}

} // namespace strudyn
