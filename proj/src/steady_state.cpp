#include "levcool/steady_state.hpp"

#include <algorithm>
#include <cmath>

#include "levcool/errors.hpp"

namespace levcool {

namespace {

constexpr complex I{0.0, 1.0};

complex trap_amplitude(const PhysicalParams& phys) { return -2.0 * I * phys.E1 / phys.kappa; }

void check_preconditions(const PhysicalParams& phys)
{
    phys.validate();
    if (phys.delta1 != 0.0) {
        throw ValidationError("mean-field solver requires delta1 = 0 (resonant trap drive)");
    }
    if (phys.E1 == complex{}) {
        throw TrapAbsentError();
    }
}

struct Iteration {
    double x0;
    int iterations;
    bool converged;
};

Iteration iterate(const PhysicalParams& phys, double seed, const MeanFieldOptions& opt)
{
    double x = seed;
    for (int it = 1; it <= opt.max_iterations; ++it) {
        const double next = x + opt.relaxation * (displacement_map(phys, x) - x);
        const double step = std::abs(next - x);
        x = next;
        if (step == 0.0 || step <= opt.tolerance * std::abs(x)) {
            return {x, it, true};
        }
    }
    return {x, opt.max_iterations, false};
}

SteadyState assemble(const PhysicalParams& phys, double x0, int iterations)
{
    const double g = coupling_g(phys);
    const double k = phys.wavenumber();
    const auto amps = cavity_amplitudes(phys, x0);
    SteadyState ss;
    ss.alpha1 = trap_amplitude(phys);
    ss.alpha2 = amps.alpha2;
    ss.alpha3 = amps.alpha3;
    ss.x0 = x0;
    ss.p0 = 0.0;
    ss.delta2p = phys.delta2 + 2.0 * g * k * x0;
    ss.Omega_m = 2.0 * g * k * x_zpf(phys) * amps.alpha2;
    ss.iterations = iterations;
    ss.residual = mean_field_residual(phys, ss);
    return ss;
}

}  // namespace

CavityAmplitudes cavity_amplitudes(const PhysicalParams& phys, double x0)
{
    const double g = coupling_g(phys);
    const double k = phys.wavenumber();
    // [ i(D2 + 2gk x0) - k/2      -iJ       ] [a2]   [ i E2 ]
    // [      -i J*           i D3 - k3/2 ] [a3] = [ i E3 ]
    const complex m11 = I * (phys.delta2 + 2.0 * g * k * x0) - phys.kappa / 2.0;
    const complex m12 = -I * phys.J;
    const complex m21 = -I * std::conj(phys.J);
    const complex m22 = I * phys.delta3 - phys.kappa3 / 2.0;
    const complex b1 = I * phys.E2;
    const complex b2 = I * phys.E3;
    const complex det = m11 * m22 - m12 * m21;
    return {(b1 * m22 - m12 * b2) / det, (m11 * b2 - m21 * b1) / det};
}

double displacement_map(const PhysicalParams& phys, double x0)
{
    const auto amps = cavity_amplitudes(phys, x0);
    const double n1 = std::norm(trap_amplitude(phys));
    return std::norm(amps.alpha2) / (2.0 * phys.wavenumber() * n1);
}

double mean_field_residual(const PhysicalParams& phys, const SteadyState& ss)
{
    const double g = coupling_g(phys);
    const double k = phys.wavenumber();
    const double e_scale = std::max({std::abs(phys.E1), std::abs(phys.E2), std::abs(phys.E3)});

    const complex r1 = -phys.kappa / 2.0 * ss.alpha1 - I * phys.E1;
    const complex r2 = (I * (phys.delta2 + 2.0 * g * k * ss.x0) - phys.kappa / 2.0) * ss.alpha2 -
                       I * phys.J * ss.alpha3 - I * phys.E2;
    const complex r3 =
        (I * phys.delta3 - phys.kappa3 / 2.0) * ss.alpha3 - I * std::conj(phys.J) * ss.alpha2 - I * phys.E3;

    const double restoring = 4.0 * g * k * k * std::norm(ss.alpha1) * ss.x0;
    const double pressure = 2.0 * g * k * std::norm(ss.alpha2);
    const double force_scale = std::max(std::abs(restoring) + std::abs(pressure), 1e-300);
    const double r4 = std::abs(pressure - restoring) / force_scale;

    return std::max({std::abs(r1) / e_scale, std::abs(r2) / e_scale, std::abs(r3) / e_scale,
                     pressure == 0.0 && restoring == 0.0 ? 0.0 : r4});
}

SteadyState solve_mean_fields(const PhysicalParams& phys, const MeanFieldOptions& options)
{
    check_preconditions(phys);
    if (!(options.relaxation > 0.0 && options.relaxation <= 1.0) || options.max_iterations < 1 ||
        !(options.tolerance > 0.0)) {
        throw ValidationError("invalid mean-field solver options");
    }

    const auto run = iterate(phys, 0.0, options);
    if (!run.converged) {
        SteadyState partial = assemble(phys, run.x0, run.iterations);
        throw NonConvergenceError(run.iterations, partial.residual);
    }
    SteadyState ss = assemble(phys, run.x0, run.iterations);
    ss.converged = true;

    if (options.check_uniqueness && ss.x0 != 0.0) {
        // A distant seed on the far side of the fixed point probes for a second branch.
        for (const double factor : {10.0, 0.1}) {
            const auto other = iterate(phys, factor * ss.x0, options);
            if (other.converged && std::abs(other.x0 - ss.x0) > 1e-6 * std::abs(ss.x0)) {
                ss.multistable = true;
            }
        }
    }
    return ss;
}

NormalizedParams linear_point(const SteadyState& ss, const PhysicalParams& phys)
{
    if (!ss.converged) {
        throw ValidationError("linear point requested from an unconverged steady state");
    }
    return normalize(phys, ss);
}

double implied_omega_m(const PhysicalParams& phys, const SteadyState& ss)
{
    const double g = coupling_g(phys);
    const double k = phys.wavenumber();
    return std::sqrt(4.0 * constants::hbar * g * k * k * std::norm(ss.alpha1) / phys.mass());
}

double trap_drive_for_frequency(const PhysicalParams& phys)
{
    const double g = coupling_g(phys);
    const double k = phys.wavenumber();
    const double n1 = phys.mass() * phys.omega_m * phys.omega_m / (4.0 * constants::hbar * g * k * k);
    return phys.kappa / 2.0 * std::sqrt(n1);
}

double drive_for_coupling(const PhysicalParams& phys, double target_Omega_m, const MeanFieldOptions& options)
{
    if (!(target_Omega_m >= 0.0) || !std::isfinite(target_Omega_m)) {
        throw ValidationError("target Omega_m must be finite and >= 0");
    }
    check_preconditions(phys);
    if (target_Omega_m == 0.0) {
        return 0.0;
    }
    const complex phase = std::abs(phys.E2) > 0.0 ? phys.E2 / std::abs(phys.E2) : complex{1.0, 0.0};
    auto coupling_at = [&](double e2) {
        PhysicalParams trial = phys;
        trial.E2 = e2 * phase;
        MeanFieldOptions opt = options;
        opt.check_uniqueness = false;
        return std::abs(solve_mean_fields(trial, opt).Omega_m) / phys.omega_m;
    };

    double lo = 0.0;
    double hi = std::max(std::abs(phys.E2), phys.kappa);
    for (int grow = 0; coupling_at(hi) < target_Omega_m; ++grow) {
        if (grow > 200) {
            throw NonConvergenceError(grow, target_Omega_m);
        }
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (coupling_at(mid) < target_Omega_m ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace levcool
