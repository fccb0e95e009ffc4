#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "strudyn/linalg/dense_matrix.hpp"
#include "strudyn/spectral/operators.hpp"

namespace strudyn {

/// How generalized-alpha operators are compared with the exact flow.
/// Reduced compares 2x2 maps on [u, hw] started from consistent
/// accelerations; Augmented compares the 3x3 maps on [u, hw, h^2 a].
enum class GAlphaForm { Reduced, Augmented };

GAlphaForm parse_galpha_form(const std::string& s);

struct GridSpec {
    double zeta_min = -1.0;
    double zeta_max = 0.0;
    std::size_t zeta_count = 101;
    double omega_min = 0.01;
    double omega_max = 10.0;
    std::size_t omega_count = 101;
    GAlphaForm galpha_form = GAlphaForm::Reduced;

    void validate() const;
};

/// values[i * omega.size() + j] belongs to (zeta[i], omega[j]).
struct OperatorGrid {
    std::string method;
    std::vector<double> zeta;
    std::vector<double> omega;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[i * omega.size() + j]; }
    /// Header `zeta,omega,value`, 17 significant digits.
    void write_csv(std::ostream& os) const;
};

/// Discrete and exact operators of one method at one point, in the form
/// used for comparison. Methods: trbdf2, newmark, newmark-b13,
/// newmark-r0/r025/r05, cha-r0/r025/r05, cn, theta051, ie, gauss4.
struct OperatorPair {
    DenseMatrix discrete;
    DenseMatrix exact;
};
OperatorPair operator_pair(const std::string& method, const OscillatorPoint& p,
                           GAlphaForm form = GAlphaForm::Reduced);

/// ||D||_2 / ||E||_2.
double norm_ratio(const std::string& method, const OscillatorPoint& p, GAlphaForm form = GAlphaForm::Reduced);
/// ||D - E||_2 / ||E||_2.
double relative_error(const std::string& method, const OscillatorPoint& p, GAlphaForm form = GAlphaForm::Reduced);

/// A sample where the implicit step matrix is singular (a pole of D, only
/// reachable for zeta < 0) is stored as +inf.
OperatorGrid norm_ratio_grid(const std::string& method, const GridSpec& spec);
OperatorGrid relative_error_grid(const std::string& method, const GridSpec& spec);

/// Method ids accepted by the grid functions, in report order.
const std::vector<std::string>& spectral_methods();

} // namespace strudyn
