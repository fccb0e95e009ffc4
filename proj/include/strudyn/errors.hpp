#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strudyn {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// File system failure while reading inputs or writing results.
class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Newton failure; carries enough context to locate the failing solve.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& stage, int iterations, double residual)
        : Error("Newton did not converge in " + stage + " after " + std::to_string(iterations) +
                " iterations (residual " + std::to_string(residual) + ")"),
          stage_(stage), iterations_(iterations), residual_(residual) {}

    const std::string& stage() const noexcept { return stage_; }
    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    std::string stage_;
    int iterations_;
    double residual_;
};

/// Wraps an error raised while advancing a trajectory.
class StepError : public Error {
public:
    StepError(std::size_t step, const std::string& what)
        : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

} // namespace strudyn
