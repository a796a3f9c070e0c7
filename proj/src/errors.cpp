#include "levcool/errors.hpp"

#include <cstdio>

namespace levcool {

namespace {

std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

NonConvergenceError::NonConvergenceError(int iterations, double residual)
    : NumericError("mean-field iteration did not converge after " + std::to_string(iterations) +
                   " iterations (residual " + fmt_double(residual) + ")"),
      iterations_(iterations),
      residual_(residual)
{
}

NotCoolingError::NotCoolingError(double gamma_opt)
    : NumericError("net optical damping is not positive (Gamma_opt = " + fmt_double(gamma_opt) + ")"),
      gamma_opt_(gamma_opt)
{
}

UnstableError::UnstableError(double max_real_eigenvalue)
    : NumericError("linearized dynamics unstable (max Re(eigenvalue) = " + fmt_double(max_real_eigenvalue) + ")"),
      max_real_(max_real_eigenvalue)
{
}

IllConditionedError::IllConditionedError(double relative_residual)
    : NumericError("Lyapunov solve missed residual target (relative residual " + fmt_double(relative_residual) +
                   ")"),
      residual_(relative_residual)
{
}

GridTooCoarseError::GridTooCoarseError(double omega)
    : NumericError("spectrum grid too coarse to classify extremum near omega = " + fmt_double(omega)),
      omega_(omega)
{
}

}  // namespace levcool
