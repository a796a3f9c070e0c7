#include "levcool/params.hpp"

#include <cmath>
#include <string>

#include "levcool/errors.hpp"
#include "levcool/steady_state.hpp"

namespace levcool {

namespace {

void require(bool ok, const char* what)
{
    if (!ok) {
        throw ValidationError(std::string("invalid parameter: ") + what);
    }
}

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void PhysicalParams::validate() const
{
    require(std::isfinite(radius) && radius > 0.0, "radius must be > 0");
    require(std::isfinite(density) && density > 0.0, "density must be > 0");
    require(std::isfinite(epsilon) && epsilon > 1.0, "epsilon must be > 1");
    require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be > 0");
    require(std::isfinite(cavity_length) && cavity_length > 0.0, "cavity length must be > 0");
    require(std::isfinite(waist) && waist > 0.0, "waist must be > 0");
    require(std::isfinite(mode_volume_factor) && mode_volume_factor > 0.0, "mode volume factor must be > 0");
    require(std::isfinite(omega_m) && omega_m > 0.0, "omega_m must be > 0");
    require(std::isfinite(kappa) && kappa > 0.0, "kappa must be > 0");
    require(std::isfinite(kappa3) && kappa3 > 0.0, "kappa3 must be > 0");
    require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be >= 0");
    require(std::isfinite(n_th) && n_th >= 0.0, "n_th must be >= 0");
    require(finite(E1) && finite(E2) && finite(E3) && finite(J), "drives and J must be finite");
    require(std::isfinite(delta1) && std::isfinite(delta2) && std::isfinite(delta3), "detunings must be finite");
}

double PhysicalParams::sphere_volume() const { return 4.0 / 3.0 * constants::pi * radius * radius * radius; }

double PhysicalParams::mass() const { return density * sphere_volume(); }

double PhysicalParams::wavenumber() const { return 2.0 * constants::pi / wavelength; }

double PhysicalParams::optical_frequency() const { return constants::speed_of_light * wavenumber(); }

double PhysicalParams::mode_volume() const { return mode_volume_factor * waist * waist * cavity_length; }

void NormalizedParams::validate() const
{
    require(std::isfinite(delta2p), "delta2p must be finite");
    require(std::isfinite(delta3), "delta3 must be finite");
    require(std::isfinite(kappa) && kappa > 0.0, "kappa must be > 0");
    require(std::isfinite(kappa3) && kappa3 > 0.0, "kappa3 must be > 0");
    require(std::isfinite(J) && J >= 0.0, "J must be >= 0");
    require(std::isfinite(Omega_m) && Omega_m >= 0.0, "Omega_m must be >= 0");
    require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be >= 0");
    require(std::isfinite(gamma_sc) && gamma_sc >= 0.0, "gamma_sc must be >= 0");
    require(std::isfinite(n_th) && n_th >= 0.0, "n_th must be >= 0");
}

double polarizability_factor(double epsilon) { return (epsilon - 1.0) / (epsilon + 2.0); }

double gamma_sc(double radius, double epsilon, double wavelength)
{
    require(std::isfinite(radius) && radius >= 0.0, "radius must be >= 0");
    require(std::isfinite(epsilon) && epsilon >= 1.0, "epsilon must be >= 1");
    require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be > 0");
    const double volume = 4.0 / 3.0 * constants::pi * radius * radius * radius;
    const double ratio = volume / (wavelength * wavelength * wavelength);
    return 4.0 * constants::pi * constants::pi / 5.0 * polarizability_factor(epsilon) * ratio;
}

double gamma_sc(const PhysicalParams& phys)
{
    phys.validate();
    return gamma_sc(phys.radius, phys.epsilon, phys.wavelength);
}

double coupling_g(const PhysicalParams& phys)
{
    phys.validate();
    return 3.0 * phys.sphere_volume() / (4.0 * phys.mode_volume()) * polarizability_factor(phys.epsilon) *
           phys.optical_frequency();
}

double x_zpf(const PhysicalParams& phys)
{
    phys.validate();
    return std::sqrt(constants::hbar / (2.0 * phys.mass() * phys.omega_m));
}

NormalizedParams normalize(const PhysicalParams& phys, const SteadyState& steady)
{
    phys.validate();
    const double w = phys.omega_m;
    NormalizedParams p;
    p.delta2p = steady.delta2p / w;
    p.delta3 = phys.delta3 / w;
    p.kappa = phys.kappa / w;
    p.kappa3 = phys.kappa3 / w;
    // The phases of a2 and a3 are free, so both couplings can be made real.
    p.J = std::abs(phys.J) / w;
    p.Omega_m = std::abs(steady.Omega_m) / w;
    p.gamma = phys.gamma / w;
    p.gamma_sc = gamma_sc(phys);
    p.n_th = phys.n_th;
    p.validate();
    return p;
}

RateSet denormalize(const NormalizedParams& p, double omega_m)
{
    require(std::isfinite(omega_m) && omega_m > 0.0, "omega_m must be > 0");
    return RateSet{p.delta2p * omega_m, p.delta3 * omega_m, p.kappa * omega_m,   p.kappa3 * omega_m,
                   p.J * omega_m,       p.Omega_m * omega_m, p.gamma * omega_m, p.gamma_sc * omega_m};
}

double j_sqrt_kappa(double kappa)
{
    require(kappa > 0.0, "kappa must be > 0");
    return std::sqrt(kappa);
}

double j_input_output(double kappa, double kappa3)
{
    require(kappa > 0.0 && kappa3 > 0.0, "kappa and kappa3 must be > 0");
    return std::sqrt(kappa * kappa3);
}

NormalizedParams single_cavity(NormalizedParams p)
{
    p.J = 0.0;
    p.delta2p = -p.kappa / 2.0;
    return p;
}

}  // namespace levcool
