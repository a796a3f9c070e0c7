#ifndef LEVCOOL_RESPONSE_HPP
#define LEVCOOL_RESPONSE_HPP

#include <span>
#include <vector>

#include "levcool/params.hpp"

namespace levcool {

// Frequency-domain response of the coupled cavities and the mechanical mode.
// Frequencies and rates in units of omega_m.

complex chi2(double omega, const NormalizedParams& p);
complex chi3(double omega, const NormalizedParams& p);
complex chi_m(double omega, const NormalizedParams& p);
// 1 / (1/chi2 + J^2 chi3)
complex chi_total(double omega, const NormalizedParams& p);

enum class SelfEnergyConvention {
    mirrored,  // -i Omega^2 [chi(w) - chi*(-w)]; consistent with A_- - A_+
    as_printed,  // -i Omega^2 [chi(w) - chi*(w)]; purely real, kept for comparison
};

complex self_energy(double omega, const NormalizedParams& p,
                    SelfEnergyConvention convention = SelfEnergyConvention::mirrored);

// Force noise spectrum as the dimensionless S_FF x_zpf^2 / omega_m.
double s_ff(double omega, const NormalizedParams& p);

struct ResponseSet {
    double omega;
    complex chi2, chi3, chi, chi_m, sigma;
};

ResponseSet response_at(double omega, const NormalizedParams& p);

struct SpectrumSample {
    double omega;
    double S;
};

enum class ExtremumKind { max, min };

struct Extremum {
    double omega;  // parabolic refinement of the sampled extremum
    double S;
    ExtremumKind kind;
    std::size_t index;  // grid index of the sampled extremum
};

// n uniform points spanning [lo, hi]; n >= 2.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

// Requires a strictly increasing grid.
std::vector<SpectrumSample> spectrum_scan(std::span<const double> omega_grid, const NormalizedParams& p);

// Extrema located by sign changes of the discrete derivative. Throws GridTooCoarseError
// when neighbouring samples are tied at a turning point or turning points fall on
// adjacent samples.
std::vector<Extremum> find_extrema(std::span<const SpectrumSample> samples);

enum class LineShape { none, lorentzian_peak, fano, eit };

// Classifies the feature in the window [center - half_width, center + half_width]:
// a single adjacent max/min pair is Fano, a min flanked by two maxima is EIT-like.
LineShape classify_lineshape(std::span<const Extremum> extrema, double center, double half_width);

const char* to_string(LineShape shape);
const char* to_string(ExtremumKind kind);

}  // namespace levcool

#endif  // LEVCOOL_RESPONSE_HPP
