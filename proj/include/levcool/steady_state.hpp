#ifndef LEVCOOL_STEADY_STATE_HPP
#define LEVCOOL_STEADY_STATE_HPP

#include "levcool/params.hpp"

namespace levcool {

// Classical mean fields of the driven three-mode system and the derived
// linearization point. SI units (x0 in m, rates in rad/s).
struct SteadyState {
    complex alpha1{};
    complex alpha2{};
    complex alpha3{};
    double x0 = 0.0;
    double p0 = 0.0;  // always exactly zero
    double delta2p = 0.0;  // delta2 + 2 g k x0
    complex Omega_m{};  // 2 g k x_zpf alpha2
    bool converged = false;
    bool multistable = false;  // a perturbed restart reached a different fixed point
    int iterations = 0;
    double residual = 0.0;
};

struct MeanFieldOptions {
    double relaxation = 0.5;
    double tolerance = 1e-12;  // on |dx0 / x0|
    int max_iterations = 10000;
    bool check_uniqueness = true;
};

struct CavityAmplitudes {
    complex alpha2;
    complex alpha3;
};

// Exact solution of the linear (alpha2, alpha3) block at a fixed displacement x0.
CavityAmplitudes cavity_amplitudes(const PhysicalParams& phys, double x0);

// x0 -> |alpha2(x0)|^2 / (2 k |alpha1|^2); the steady displacement is its fixed point.
double displacement_map(const PhysicalParams& phys, double x0);

// Largest residual of the four mean-field balance equations, each relative to its own scale.
double mean_field_residual(const PhysicalParams& phys, const SteadyState& ss);

// Requires delta1 == 0 and E1 != 0. Throws NonConvergenceError, TrapAbsentError, ValidationError.
SteadyState solve_mean_fields(const PhysicalParams& phys, const MeanFieldOptions& options = {});

// Normalized linearization point. Requires ss.converged.
NormalizedParams linear_point(const SteadyState& ss, const PhysicalParams& phys);

// Trap frequency implied by the mode-1 restoring force: m w^2 = 4 hbar g k^2 |alpha1|^2.
double implied_omega_m(const PhysicalParams& phys, const SteadyState& ss);

// |E1| (rad/s) for which the trap restoring force reproduces phys.omega_m.
double trap_drive_for_frequency(const PhysicalParams& phys);

// |E2| (rad/s, phase of E2 kept) at which the solved Omega_m equals target * omega_m.
// Bisection against the forward solver.
double drive_for_coupling(const PhysicalParams& phys, double target_Omega_m, const MeanFieldOptions& options = {});

}  // namespace levcool

#endif  // LEVCOOL_STEADY_STATE_HPP
