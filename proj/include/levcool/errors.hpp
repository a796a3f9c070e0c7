#ifndef LEVCOOL_ERRORS_HPP
#define LEVCOOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levcool {

// Bad input: violated parameter invariant, unknown config key, malformed flag.
// Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for failures of a numerical procedure on valid input.
// Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergenceError : public NumericError {
public:
    NonConvergenceError(int iterations, double residual);
    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

class TrapAbsentError : public ValidationError {
public:
    TrapAbsentError() : ValidationError("trap drive E1 is zero; no restoring force") {}
};

class NotCoolingError : public NumericError {
public:
    explicit NotCoolingError(double gamma_opt);
    double gamma_opt() const noexcept { return gamma_opt_; }

private:
    double gamma_opt_;
};

class NoCoolingWindowError : public NumericError {
public:
    NoCoolingWindowError() : NumericError("net cooling rate is non-positive over the whole detuning scan") {}
};

class UnstableError : public NumericError {
public:
    explicit UnstableError(double max_real_eigenvalue);
    double max_real_eigenvalue() const noexcept { return max_real_; }

private:
    double max_real_;
};

class IllConditionedError : public NumericError {
public:
    explicit IllConditionedError(double relative_residual);
    double relative_residual() const noexcept { return residual_; }

private:
    double residual_;
};

class GridTooCoarseError : public NumericError {
public:
    explicit GridTooCoarseError(double omega);
    double omega() const noexcept { return omega_; }

private:
    double omega_;
};

}  // namespace levcool

#endif  // LEVCOOL_ERRORS_HPP
