#pragma once

#include <cmath>

#include "strudyn/integrators/galpha.hpp"
#include "strudyn/linalg/dense_matrix.hpp"

namespace strudyn {

/// Damped scalar oscillator y'' = -(c/m) y' - (k/m) y sampled with step h:
/// zeta = h c / (2m) and omega = h sqrt(k/m - (c/2m)^2). Operators act on
/// [u, h w] (and h^2 a for the augmented forms).
struct OscillatorPoint {
    double zeta = 0.0;
    double omega = 1.0;

    /// h^2 k / m.
    double stiffness() const noexcept { return omega * omega + zeta * zeta; }
    /// h c / m.
    double damping() const noexcept { return 2.0 * zeta; }
};

/// exp(h J) for J the first-order matrix of the oscillator.
DenseMatrix exact_operator(const OscillatorPoint& p);

/// [[I, 0], [xi, 1]]^{-1} [[E, 0], [0, 0]] on [u, hw, h^2 a], with
/// xi = [stiffness, damping] so that the third row reproduces the equation
/// of motion at the new level.
DenseMatrix exact_augmented_operator(const OscillatorPoint& p);

/// Two-stage composition S2^{-1} (T2 S1^{-1} T1 + U2).
DenseMatrix trbdf2_operator(const OscillatorPoint& p, double gamma = 2.0 - std::sqrt(2.0));

/// Left^{-1} Right of the generalized-alpha recursion on [u, hw, h^2 a].
DenseMatrix galpha_operator(const OscillatorPoint& p, const GAlphaParameters& params);

/// The 3x3 operator started from an acceleration consistent with the
/// equation of motion and read back on [u, hw]: [I 0] D P with
/// P = [[1, 0], [0, 1], [-stiffness, -damping]].
DenseMatrix galpha_reduced_operator(const OscillatorPoint& p, const GAlphaParameters& params);

DenseMatrix theta_operator(const OscillatorPoint& p, double theta);

/// Companion form on [x^n, x^{n-1}] (4x4).
DenseMatrix bdf2_operator(const OscillatorPoint& p);

/// (2,2) Pade approximant of exp(h J).
DenseMatrix gauss4_operator(const OscillatorPoint& p);

/// L D L^{-1} with L = diag(sqrt(stiffness), 1): a 2x2 operator on
/// [u, hw] rewritten on the energy variables [sqrt(h^2 k/m) u, hw], in
/// which the undamped exact flow is a rotation.
DenseMatrix energy_scaled(const DenseMatrix& d, const OscillatorPoint& p);

} // namespace strudyn
