#ifndef LEVCOOL_LYAPUNOV_HPP
#define LEVCOOL_LYAPUNOV_HPP

#include <Eigen/Dense>

#include "levcool/params.hpp"

namespace levcool {

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using ComplexMatrix6 = Eigen::Matrix<complex, 6, 6>;
using ComplexVector6 = Eigen::Matrix<complex, 6, 1>;

// Quadrature indices: X = (a + a^dag)/sqrt2, Y = (a - a^dag)/(i sqrt2), vacuum variance 1/2.
enum Quadrature : int { X2 = 0, Y2 = 1, X3 = 2, Y3 = 3, Q = 4, P = 5 };

// Linearized three-mode dynamics dx/dt = A x + noise, <noise noise^T> = D delta(t - t').
struct LinearModel {
    Matrix6 drift;
    Matrix6 diffusion;
};

LinearModel build_model(const NormalizedParams& p);

struct EigenStability {
    bool stable;
    double max_real_eigenvalue;
};

EigenStability eigen_stable(const LinearModel& model);

struct CovarianceResult {
    Matrix6 V;
    double n_phonon = 0.0;  // (V_qq + V_pp - 1) / 2
    bool stable = false;
    double max_real_eigenvalue = 0.0;
    double relative_residual = 0.0;  // |A V + V A^T + D| / |D|
};

// Steady covariance from A V + V A^T + D = 0 (dense Kronecker solve).
// Throws UnstableError when any eigenvalue has Re >= 0, IllConditionedError when
// the relative residual exceeds residual_target.
CovarianceResult solve_steady(const LinearModel& model, double residual_target = 1e-10);

// (-i omega I - A)^-1
ComplexMatrix6 resolvent(const LinearModel& model, double omega);

// Quadrature forcing produced by a unit annihilation-operator input on the cavity mode
// whose X quadrature sits at index `x_index` (creation-operator input set to zero).
ComplexVector6 annihilation_input(int x_index, double rate);

// Force spectrum S_FF x_zpf^2 computed from the drift matrix with the mechanical
// coupling switched off; an independent route to s_ff().
double model_force_spectrum(const NormalizedParams& p, double omega);

struct OracleReport {
    double kappa = 0.0;
    double Omega_m = 0.0;
    double gamma_opt = 0.0;
    double n_f_formula = 0.0;  // A_+/Gamma + gamma_sc/Gamma
    double n_lyapunov = 0.0;  // exact, mechanical bath removed (gamma = n_th = 0)
    double rel_dev = 0.0;  // |n_f_formula - n_lyapunov| / n_lyapunov
    bool stable = false;
    // Diagnostics with the mechanical bath kept (n_th = 0): the formula omits gamma in
    // the denominator, so the comparable closed form is (A_+ + gamma_sc)/(Gamma + gamma).
    double n_lyapunov_with_bath = 0.0;
    double n_formula_with_bath = 0.0;
};

// Perturbative phonon limit vs exact covariance. Throws NotCoolingError when
// Gamma_opt <= 0 and UnstableError when the bath-free model is unstable.
OracleReport oracle_compare(const NormalizedParams& p);

}  // namespace levcool

#endif  // LEVCOOL_LYAPUNOV_HPP
