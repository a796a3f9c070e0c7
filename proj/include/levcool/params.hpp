#ifndef LEVCOOL_PARAMS_HPP
#define LEVCOOL_PARAMS_HPP

#include <complex>
#include <numbers>

namespace levcool {

using complex = std::complex<double>;

namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double speed_of_light = 299792458.0;  // m/s
inline constexpr double silica_density = 2200.0;  // kg/m^3
}  // namespace constants

// Laboratory-unit description of the levitated sphere, the trap/cooling cavity
// and the auxiliary cavity. Lengths in m, rates in rad/s, drives in rad/s.
struct PhysicalParams {
    double radius = 50e-9;
    double density = constants::silica_density;
    double epsilon = 2.0;
    double wavelength = 1e-6;
    double cavity_length = 1e-2;
    double waist = 25e-6;
    // V_c = mode_volume_factor * w^2 * L; pi/4 is the standing-wave Gaussian convention.
    double mode_volume_factor = constants::pi / 4.0;

    double omega_m = 2.0 * constants::pi * 0.5e6;
    double kappa = 0.0;
    double kappa3 = 0.0;
    double gamma = 0.0;
    double n_th = 0.0;

    complex E1{};
    complex E2{};
    complex E3{};
    double delta1 = 0.0;
    double delta2 = 0.0;
    double delta3 = 0.0;
    complex J{};

    // Throws ValidationError naming the first violated invariant.
    void validate() const;

    double sphere_volume() const;
    double mass() const;
    double wavenumber() const;
    double optical_frequency() const;
    double mode_volume() const;
};

// Dimensionless model state: every rate in units of omega_m. J and Omega_m are
// real and nonnegative (phases absorbed into the mode operators).
struct NormalizedParams {
    double delta2p = 0.0;  // detuning relative to the displaced cavity resonance
    double delta3 = 0.0;
    double kappa = 1.0;
    double kappa3 = 1.0;
    double J = 0.0;
    double Omega_m = 0.0;  // effective optomechanical coupling
    double gamma = 0.0;
    double gamma_sc = 0.0;  // recoil heating rate
    double n_th = 0.0;

    void validate() const;
};

// Same rates in rad/s; produced by denormalize().
struct RateSet {
    double delta2p, delta3, kappa, kappa3, J, Omega_m, gamma, gamma_sc;
};

struct SteadyState;

// (eps - 1) / (eps + 2)
double polarizability_factor(double epsilon);

// Recoil heating rate gamma_sc / omega_m for a sphere of the given radius.
double gamma_sc(const PhysicalParams& phys);
double gamma_sc(double radius, double epsilon, double wavelength);

// Single-photon optomechanical coupling g in rad/s.
double coupling_g(const PhysicalParams& phys);

// sqrt(hbar / (2 m omega_m)) in m.
double x_zpf(const PhysicalParams& phys);

NormalizedParams normalize(const PhysicalParams& phys, const SteadyState& steady);
RateSet denormalize(const NormalizedParams& p, double omega_m);

// Tunnel-coupling presets, normalized units.
double j_sqrt_kappa(double kappa);  // J = sqrt(kappa * omega_m)
double j_input_output(double kappa, double kappa3);  // J = sqrt(kappa * kappa3)

// Single-cavity counterpart: J = 0 and the Lorentzian optimum delta2p = -kappa/2.
NormalizedParams single_cavity(NormalizedParams p);

}  // namespace levcool

#endif  // LEVCOOL_PARAMS_HPP
