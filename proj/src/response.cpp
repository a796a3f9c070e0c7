#include "levcool/response.hpp"

#include <algorithm>
#include <cmath>

#include "levcool/errors.hpp"

namespace levcool {

namespace {

constexpr complex I{0.0, 1.0};

complex lorentzian(double omega, double detuning, double linewidth)
{
    return 1.0 / (-I * (omega + detuning) + linewidth / 2.0);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Vertex of the parabola through three (possibly non-uniform) points.
double parabolic_vertex(double x0, double y0, double x1, double y1, double x2, double y2)
{
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    if (curvature == 0.0 || !std::isfinite(curvature)) {
        return x1;
    }
    const double vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
    return std::clamp(vertex, x0, x2);
}

}  // namespace

complex chi2(double omega, const NormalizedParams& p) { return lorentzian(omega, p.delta2p, p.kappa); }

complex chi3(double omega, const NormalizedParams& p) { return lorentzian(omega, p.delta3, p.kappa3); }

complex chi_m(double omega, const NormalizedParams& p) { return lorentzian(omega, -1.0, p.gamma); }

complex chi_total(double omega, const NormalizedParams& p)
{
    const complex inv = -I * (omega + p.delta2p) + p.kappa / 2.0 + p.J * p.J * chi3(omega, p);
    return 1.0 / inv;
}

complex self_energy(double omega, const NormalizedParams& p, SelfEnergyConvention convention)
{
    const double omega_conj = convention == SelfEnergyConvention::mirrored ? -omega : omega;
    const double om2 = p.Omega_m * p.Omega_m;
    return -I * om2 * (chi_total(omega, p) - std::conj(chi_total(omega_conj, p)));
}

double s_ff(double omega, const NormalizedParams& p)
{
    const complex chi = chi_total(omega, p);
    const double aux = p.kappa3 * p.J * p.J * std::norm(chi3(omega, p));
    return p.Omega_m * p.Omega_m * std::norm(chi) * (p.kappa + aux);
}

ResponseSet response_at(double omega, const NormalizedParams& p)
{
    return {omega, chi2(omega, p), chi3(omega, p), chi_total(omega, p), chi_m(omega, p), self_energy(omega, p)};
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n)
{
    if (n < 2 || !std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
        throw ValidationError("grid needs finite lo < hi and at least 2 points");
    }
    std::vector<double> grid(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = lo + step * static_cast<double>(i);
    }
    grid.back() = hi;
    return grid;
}

std::vector<SpectrumSample> spectrum_scan(std::span<const double> omega_grid, const NormalizedParams& p)
{
    p.validate();
    for (std::size_t i = 1; i < omega_grid.size(); ++i) {
        if (!(omega_grid[i] > omega_grid[i - 1])) {
            throw ValidationError("spectrum grid must be strictly increasing");
        }
    }
    std::vector<SpectrumSample> out;
    out.reserve(omega_grid.size());
    for (const double w : omega_grid) {
        out.push_back({w, s_ff(w, p)});
    }
    return out;
}

std::vector<Extremum> find_extrema(std::span<const SpectrumSample> samples)
{
    std::vector<Extremum> out;
    if (samples.size() < 3) {
        return out;
    }
    std::size_t last_nonzero = 0;
    int last_sign = 0;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const int s = sign_of(samples[i + 1].S - samples[i].S);
        if (s == 0) {
            continue;
        }
        if (last_sign != 0 && s != last_sign) {
            const std::size_t turn = i;
            if (turn != last_nonzero + 1) {
                // Flat run at the turning point: the extremum position is unresolved.
                throw GridTooCoarseError(samples[turn].omega);
            }
            if (!out.empty() && out.back().index + 1 == turn) {
                throw GridTooCoarseError(samples[turn].omega);
            }
            const auto& a = samples[turn - 1];
            const auto& b = samples[turn];
            const auto& c = samples[turn + 1];
            out.push_back({parabolic_vertex(a.omega, a.S, b.omega, b.S, c.omega, c.S), b.S,
                           last_sign > 0 ? ExtremumKind::max : ExtremumKind::min, turn});
        }
        last_sign = s;
        last_nonzero = i;
    }
    return out;
}

LineShape classify_lineshape(std::span<const Extremum> extrema, double center, double half_width)
{
    std::vector<Extremum> window;
    for (const auto& e : extrema) {
        if (std::abs(e.omega - center) <= half_width) {
            window.push_back(e);
        }
    }
    if (window.size() == 3 && window[0].kind == ExtremumKind::max && window[1].kind == ExtremumKind::min &&
        window[2].kind == ExtremumKind::max) {
        return LineShape::eit;
    }
    if (window.size() == 2 && window[0].kind != window[1].kind) {
        return LineShape::fano;
    }
    if (window.size() == 1 && window[0].kind == ExtremumKind::max) {
        return LineShape::lorentzian_peak;
    }
    return LineShape::none;
}

const char* to_string(LineShape shape)
{
    switch (shape) {
    case LineShape::lorentzian_peak: return "lorentzian";
    case LineShape::fano: return "fano";
    case LineShape::eit: return "eit";
    case LineShape::none: break;
    }
    return "none";
}

const char* to_string(ExtremumKind kind) { return kind == ExtremumKind::max ? "max" : "min"; }

}  // namespace levcool
