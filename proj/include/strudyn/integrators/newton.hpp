#pragma once

#include <functional>
#include <span>
#include <string>

#include "strudyn/linalg/factorization.hpp"
#include "strudyn/linalg/vector_ops.hpp"

namespace strudyn {

struct NewtonConfig {
    /// Absolute tolerance per sqrt(n): the stopping threshold is
    /// atol * sqrt(n) + rtol * ||r(x0)||.
    double atol = 1e-10;
    double rtol = 1e-10;
    int max_iterations = 25;
    /// Forward-difference step scale for Jacobians that are not supplied.
    double fd_step = 1e-7;

    void validate() const;
};

struct NewtonResult {
    Vector x;
    int iterations = 0;
    double residual_norm = 0.0;
    int factorizations = 0;
};

using ResidualFn = std::function<Vector(std::span<const double>)>;
/// Returns the factorized Jacobian at x.
using JacobianFn = std::function<Factorization(std::span<const double>)>;

/// Modified Newton: the Jacobian from x0 is reused while it keeps halving
/// the residual. A full step that fails to reduce the residual is halved (up
/// to 8 times); after a halved step or a step that contracted the residual by
/// less than 1/2, the Jacobian is refreshed at the accepted point.
/// At least one correction is taken unless r(x0) is exactly zero.
NewtonResult newton_solve(const ResidualFn& residual, const JacobianFn& jacobian, Vector x0,
                          const NewtonConfig& cfg, const std::string& stage = "newton");

/// Same, with a dense forward-difference Jacobian.
NewtonResult newton_solve(const ResidualFn& residual, Vector x0, const NewtonConfig& cfg,
                          const std::string& stage = "newton");

} // namespace strudyn
