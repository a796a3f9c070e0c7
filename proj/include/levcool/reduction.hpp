#ifndef LEVCOOL_REDUCTION_HPP
#define LEVCOOL_REDUCTION_HPP

#include "levcool/cooling.hpp"
#include "levcool/params.hpp"

namespace levcool {

// Ratios behind the "much greater than" conditions of the two-mode reduction.
struct RegimeDiagnostics {
    double factor = 10.0;
    double detuning_ratio = 0.0;  // |delta2p| / |delta3|
    double kappa_over_kappa3 = 0.0;
    double kappa_over_gamma = 0.0;
    double kappa_over_J = 0.0;
    double detuning_over_kappa = 0.0;  // |delta2p| / kappa
    bool detuning_ok = false;
    bool kappa3_ok = false;
    bool gamma_ok = false;
    bool J_ok = false;
    // Not part of regime_ok: the Lorentzian two-mode spectrum additionally needs |delta2p| >> kappa.
    bool far_detuned = false;
};

// Auxiliary mode dressed by adiabatic elimination of the lossy cavity mode.
struct EffectiveParams {
    double eta = 0.0;  // J / sqrt(delta2p^2 + (kappa/2)^2)
    double Omega_eff = 0.0;
    double kappa_eff = 0.0;
    double Delta_eff = 0.0;
    bool regime_ok = false;
    RegimeDiagnostics diagnostics;
};

EffectiveParams effective_params(const NormalizedParams& p, double regime_factor = 10.0);

// Sideband rates predicted by the two-mode model (Lorentzian of the effective mode).
SidebandRates two_mode_rates(const NormalizedParams& p);

// delta2p at which Delta_eff equals target (default -omega_m); far-detuned root.
// Throws ValidationError when no real detuning reaches the target.
double delta2p_for_effective_detuning(const NormalizedParams& p, double target = -1.0);

enum class StabilityCriterion { single_cavity, single_resolved, effective_two_mode, coupled_bound };

struct StabilityVerdict {
    bool stable = false;
    double margin = 0.0;  // signed slack; stable <=> margin > 0
    StabilityCriterion criterion = StabilityCriterion::single_cavity;
    bool degenerate = false;  // eta == 0: coupled bound does not apply, margin is +inf
};

// Single cavity (J treated as 0): delta2p [16 delta2p Omega^2 + (4 delta2p^2 + kappa^2)] < 0.
// margin = -(left side) / kappa^2.
StabilityVerdict stability_single(const NormalizedParams& p);

// Resolved-regime single-cavity bound at delta2p = -kappa/2: Omega^2 < kappa/4.
// margin = (kappa/4 - Omega^2) / (kappa/4).
StabilityVerdict stability_single_resolved(const NormalizedParams& p);

// Two-mode form of the single-cavity condition with effective parameters at
// arbitrary Delta_eff. margin = -(left side) / kappa_eff^2.
StabilityVerdict stability_effective(const NormalizedParams& p);

// Coupled bound at Delta_eff = -omega_m:
// Omega^2 < (4 + (kappa3 + eta^2 kappa)^2) / (16 eta^2). margin = (bound - Omega^2) / bound.
StabilityVerdict stability_coupled(const NormalizedParams& p);

double coupled_bound(const NormalizedParams& p);
double eta_min(double kappa, double kappa3);
// Minimum over eta of the coupled bound: (kappa/4) sqrt(1 + kappa3^2/4) + kappa kappa3 / 8.
double s_min(double kappa, double kappa3);

const char* to_string(StabilityCriterion c);

}  // namespace levcool

#endif  // LEVCOOL_REDUCTION_HPP
