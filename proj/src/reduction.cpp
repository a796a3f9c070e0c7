#include "levcool/reduction.hpp"

#include <cmath>
#include <limits>

#include "levcool/errors.hpp"

namespace levcool {

namespace {

double ratio(double num, double den)
{
    if (den == 0.0) {
        return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return num / den;
}

double eta_of(const NormalizedParams& p)
{
    return p.J / std::sqrt(p.delta2p * p.delta2p + p.kappa * p.kappa / 4.0);
}

}  // namespace

EffectiveParams effective_params(const NormalizedParams& p, double regime_factor)
{
    p.validate();
    if (!(regime_factor > 0.0)) {
        throw ValidationError("regime factor must be > 0");
    }
    EffectiveParams e;
    e.eta = eta_of(p);
    e.Omega_eff = e.eta * p.Omega_m;
    e.kappa_eff = p.kappa3 + e.eta * e.eta * p.kappa;
    e.Delta_eff = p.delta3 - e.eta * e.eta * p.delta2p;

    auto& d = e.diagnostics;
    d.factor = regime_factor;
    d.detuning_ratio = ratio(std::abs(p.delta2p), std::abs(p.delta3));
    d.kappa_over_kappa3 = ratio(p.kappa, p.kappa3);
    d.kappa_over_gamma = ratio(p.kappa, p.gamma);
    d.kappa_over_J = ratio(p.kappa, p.J);
    d.detuning_over_kappa = ratio(std::abs(p.delta2p), p.kappa);
    d.detuning_ok = d.detuning_ratio >= regime_factor;
    d.kappa3_ok = d.kappa_over_kappa3 >= regime_factor;
    d.gamma_ok = d.kappa_over_gamma >= regime_factor;
    d.J_ok = d.kappa_over_J >= regime_factor;
    d.far_detuned = d.detuning_over_kappa >= regime_factor;
    e.regime_ok = d.detuning_ok && d.kappa3_ok && d.gamma_ok && d.J_ok;
    return e;
}

SidebandRates two_mode_rates(const NormalizedParams& p)
{
    const auto e = effective_params(p);
    auto lorentz = [&](double omega) {
        const double det = omega + e.Delta_eff;
        return e.Omega_eff * e.Omega_eff * e.kappa_eff / (det * det + e.kappa_eff * e.kappa_eff / 4.0);
    };
    return {lorentz(1.0), lorentz(-1.0)};
}

double delta2p_for_effective_detuning(const NormalizedParams& p, double target)
{
    p.validate();
    // (delta3 - target)(d^2 + kappa^2/4) = J^2 d
    const double c = p.delta3 - target;
    const double j2 = p.J * p.J;
    if (c == 0.0 || j2 == 0.0) {
        throw ValidationError("effective detuning target unreachable (needs J > 0 and delta3 != target)");
    }
    const double disc = j2 * j2 - c * c * p.kappa * p.kappa;
    if (disc < 0.0) {
        throw ValidationError("no real delta2p gives the requested effective detuning");
    }
    const double root = std::sqrt(disc);
    const double a = (j2 + root) / (2.0 * c);
    const double b = (j2 - root) / (2.0 * c);
    return std::abs(a) >= std::abs(b) ? a : b;
}

StabilityVerdict stability_single(const NormalizedParams& p)
{
    p.validate();
    const double d = p.delta2p;
    const double lhs = d * (16.0 * d * p.Omega_m * p.Omega_m + (4.0 * d * d + p.kappa * p.kappa));
    StabilityVerdict v;
    v.criterion = StabilityCriterion::single_cavity;
    v.margin = -lhs / (p.kappa * p.kappa);
    v.stable = v.margin > 0.0;
    return v;
}

StabilityVerdict stability_single_resolved(const NormalizedParams& p)
{
    p.validate();
    const double bound = p.kappa / 4.0;
    StabilityVerdict v;
    v.criterion = StabilityCriterion::single_resolved;
    v.margin = (bound - p.Omega_m * p.Omega_m) / bound;
    v.stable = v.margin > 0.0;
    return v;
}

StabilityVerdict stability_effective(const NormalizedParams& p)
{
    const auto e = effective_params(p);
    const double d = e.Delta_eff;
    const double lhs = d * (16.0 * d * e.Omega_eff * e.Omega_eff + (4.0 * d * d + e.kappa_eff * e.kappa_eff));
    StabilityVerdict v;
    v.criterion = StabilityCriterion::effective_two_mode;
    v.margin = -lhs / (e.kappa_eff * e.kappa_eff);
    v.stable = v.margin > 0.0;
    return v;
}

double coupled_bound(const NormalizedParams& p)
{
    const double eta = eta_of(p);
    const double k_eff = p.kappa3 + eta * eta * p.kappa;
    return (4.0 + k_eff * k_eff) / (16.0 * eta * eta);
}

StabilityVerdict stability_coupled(const NormalizedParams& p)
{
    p.validate();
    StabilityVerdict v;
    v.criterion = StabilityCriterion::coupled_bound;
    if (eta_of(p) == 0.0) {
        v.degenerate = true;
        v.stable = true;
        v.margin = std::numeric_limits<double>::infinity();
        return v;
    }
    const double bound = coupled_bound(p);
    v.margin = (bound - p.Omega_m * p.Omega_m) / bound;
    v.stable = v.margin > 0.0;
    return v;
}

double eta_min(double kappa, double kappa3)
{
    if (!(kappa > 0.0) || !(kappa3 >= 0.0)) {
        throw ValidationError("eta_min needs kappa > 0 and kappa3 >= 0");
    }
    return std::pow(4.0 + kappa3 * kappa3, 0.25) / std::sqrt(kappa);
}

double s_min(double kappa, double kappa3)
{
    if (!(kappa > 0.0) || !(kappa3 >= 0.0)) {
        throw ValidationError("s_min needs kappa > 0 and kappa3 >= 0");
    }
    return kappa / 4.0 * std::sqrt(1.0 + kappa3 * kappa3 / 4.0) + kappa * kappa3 / 8.0;
}

const char* to_string(StabilityCriterion c)
{
    switch (c) {
    case StabilityCriterion::single_cavity: return "single";
    case StabilityCriterion::single_resolved: return "single_resolved";
    case StabilityCriterion::effective_two_mode: return "coupled_effective";
    case StabilityCriterion::coupled_bound: return "coupled";
    }
    return "unknown";
}

}  // namespace levcool
