#include "levcool/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "levcool/cooling.hpp"
#include "levcool/errors.hpp"
#include "levcool/lyapunov.hpp"
#include "levcool/presets.hpp"
#include "levcool/reduction.hpp"
#include "levcool/response.hpp"

namespace levcool {

namespace {

std::string fmt(const char* pattern, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

double rel(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

NormalizedParams fig5_at(double kappa)
{
    return preset_point(find_preset("fig5b"), kappa);
}

// --- 1 -------------------------------------------------------------------------------
CheckResult lorentzian()
{
    CheckResult r{"1", "Lorentzian reduction at J = 0", false, ""};
    double worst = 0.0;
    for (double d2 : {100.0, 0.0, -100.0}) {
        NormalizedParams p = preset_point(find_preset("fig3c"), 0.0);
        p.delta2p = d2;
        p.J = 0.0;
        for (double w : uniform_grid(-300.0, 300.0, 4001)) {
            // Omega^2 kappa / ((w + delta2p)^2 + kappa^2/4), written out by hand
            const double x = w + d2;
            const double expected = p.Omega_m * p.Omega_m * p.kappa / (x * x + 0.25 * p.kappa * p.kappa);
            worst = std::max(worst, std::abs(s_ff(w, p) - expected) / expected);
        }
    }
    r.passed = worst < 1e-12;
    r.detail = fmt("max relative error %.3e (limit 1e-12)", worst);
    return r;
}

// --- 2 -------------------------------------------------------------------------------
CheckResult self_energy_identity()
{
    CheckResult r{"2", "self-energy identities", false, ""};
    std::mt19937_64 rng(20240602);
    double worst_spec = 0.0;
    double worst_rate = 0.0;
    for (int i = 0; i < 1000; ++i) {
        NormalizedParams p;
        p.delta2p = uniform(rng, -200.0, 200.0);
        p.delta3 = uniform(rng, -5.0, 5.0);
        p.kappa = log_uniform(rng, 0.1, 1000.0);
        p.kappa3 = log_uniform(rng, 0.01, 100.0);
        p.J = uniform(rng, 0.0, 30.0);
        p.Omega_m = uniform(rng, 0.01, 5.0);
        const double w = uniform(rng, -50.0, 50.0);

        // independent complex arithmetic for the left and right sides
        const complex i1(0.0, 1.0);
        const complex c2 = 1.0 / (-i1 * (w + p.delta2p) + p.kappa / 2.0);
        const complex c3 = 1.0 / (-i1 * (w + p.delta3) + p.kappa3 / 2.0);
        const double rhs = std::norm(c2 / (1.0 + p.J * p.J * c2 * c3)) * (p.kappa + p.J * p.J * p.kappa3 * std::norm(c3));
        worst_spec = std::max(worst_spec, rel(2.0 * chi_total(w, p).real(), rhs));

        // Gamma_opt is a difference of two positive rates; compare on the scale of their sum.
        const auto sb = rates(p);
        const double g_sigma = -2.0 * self_energy(1.0, p, SelfEnergyConvention::mirrored).imag();
        const double scale = sb.A_minus + sb.A_plus;
        worst_rate = std::max(worst_rate, std::abs(net_rate(p) - g_sigma) / scale);
    }
    r.passed = worst_spec < 1e-10 && worst_rate < 1e-10;
    r.detail = fmt("2Re chi identity %.3e", worst_spec) + fmt(", Gamma_opt = -2 Im Sigma(1) %.3e (limit 1e-10)", worst_rate);
    return r;
}

// --- 3 -------------------------------------------------------------------------------
LineShape shape_of(const std::string& id, std::string& note)
{
    const FigurePreset& f = find_preset(id);
    const NormalizedParams p = preset_point(f, 0.0);
    const auto grid = f.axis1.values();
    try {
        const auto spec = spectrum_scan(grid, p);
        const auto ext = find_extrema(spec);
        const LineShape s = classify_lineshape(ext, -p.delta3, 15.0);
        note += id + "=" + to_string(s) + " ";
        return s;
    } catch (const GridTooCoarseError& e) {
        note += id + "=grid-too-coarse ";
        return LineShape::none;
    }
}

CheckResult lineshapes()
{
    CheckResult r{"3", "spectrum line shapes near the auxiliary resonance", false, ""};
    std::string note;
    const bool eit = shape_of("fig3d", note) == LineShape::eit;
    const bool fano_b = shape_of("fig3b", note) == LineShape::fano;
    const bool fano_f = shape_of("fig3f", note) == LineShape::fano;

    double worst = 0.0;
    for (const char* id : {"fig3a", "fig3c", "fig3e"}) {
        const FigurePreset& f = find_preset(id);
        const NormalizedParams p = preset_point(f, 0.0);
        const NormalizedParams s = preset_single(f, p);
        for (double w : f.axis1.values()) {
            if (std::abs(w + p.delta3) > 20.0) {
                worst = std::max(worst, std::abs(s_ff(w, p) - s_ff(w, s)) / s_ff(w, s));
            }
        }
    }
    const bool far = worst < 1e-3;
    r.passed = eit && fano_b && fano_f && far;
    r.detail = note + fmt("| far-field max relative difference %.3e (limit 1e-3)", worst);
    return r;
}

// --- 4 -------------------------------------------------------------------------------
CheckResult blue_optimum()
{
    CheckResult r{"4", "optimum cooling detuning is blue for coupled cavities", false, ""};
    NormalizedParams p;
    p.kappa = 100.0;
    p.kappa3 = 1.0;
    p.J = 10.0;
    p.delta3 = 0.5;
    p.Omega_m = 0.25;
    p.gamma = 1e-5;
    DetuningScan scan;
    scan.tolerance = 1e-4;
    const double coupled = max_cooling_rate_detuning(p, scan);
    NormalizedParams s = p;
    s.J = 0.0;
    const double single = max_cooling_rate_detuning(s, scan);
    r.passed = coupled > 1e-3 && single < -1e-3;
    r.detail = fmt("argmax Gamma_opt: coupled %.4f", coupled) + fmt(", single %.4f", single);
    return r;
}

// --- 5 -------------------------------------------------------------------------------
CheckResult ground_state_window()
{
    CheckResult r{"5", "ground-state window for kappa in [10, 100]", false, ""};
    const Axis a{"kappa", 10.0, 100.0, 50, true};
    int below = 0;
    double worst = 0.0;
    double worst_kappa = 0.0;
    for (double k : a.values()) {
        const auto c = cooling_limit(fig5_at(k));
        if (c.cooling && c.n_f < 1.0) {
            ++below;
        }
        if (!(c.n_f <= worst)) {
            worst = c.n_f;
            worst_kappa = k;
        }
    }
    const auto single = cooling_limit(single_cavity(fig5_at(100.0)));
    r.passed = below == 50 && single.cooling && single.n_f > 1.0;
    r.detail = std::to_string(below) + "/50 coupled points with n_f < 1" + fmt(", worst n_f %.5f", worst) +
               fmt(" at kappa %.2f", worst_kappa) + fmt("; single cavity n_f(100) %.3f", single.n_f);
    return r;
}

// --- 6 -------------------------------------------------------------------------------
CheckResult monotonicity()
{
    CheckResult r{"6", "n_f increasing in gamma_sc and in kappa3 > 1", false, ""};
    NormalizedParams p = fig5_at(100.0);
    bool gsc_ok = true;
    double prev = -1.0;
    for (double g : {0.0, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2}) {
        p.gamma_sc = g;
        const double n = cooling_limit(p).n_f;
        gsc_ok = gsc_ok && n > prev;
        prev = n;
    }
    std::string note = "n_f(kappa3) =";
    std::vector<double> nk;
    for (double k3 : {0.5, 1.0, 2.0, 5.0}) {
        NormalizedParams q = fig5_at(100.0);
        q.kappa3 = k3;
        nk.push_back(cooling_limit(q).n_f);
        note += fmt(" %.4f", nk.back());
    }
    const bool k3_ok = nk[1] < nk[2] && nk[2] < nk[3];
    r.passed = gsc_ok && k3_ok;
    r.detail = std::string(gsc_ok ? "gamma_sc ladder increasing; " : "gamma_sc ladder NOT increasing; ") + note;
    return r;
}

// --- 7 -------------------------------------------------------------------------------
CheckResult oracle_equivalence()
{
    CheckResult r{"7", "perturbative limit vs exact covariance", false, ""};
    std::vector<double> devs;
    std::string note = "rel dev at Omega_m {0.25,0.1,0.05,0.025}:";
    for (double om : {0.25, 0.1, 0.05, 0.025}) {
        NormalizedParams p = fig5_at(100.0);
        p.Omega_m = om;
        p.n_th = 0.0;
        devs.push_back(oracle_compare(p).rel_dev);
        note += fmt(" %.3e", devs.back());
    }
    const bool monotone = std::is_sorted(devs.rbegin(), devs.rend()) &&
                          std::adjacent_find(devs.begin(), devs.end()) == devs.end();
    r.passed = devs.back() <= 0.2 && monotone;
    r.detail = note;
    return r;
}

// --- 8 -------------------------------------------------------------------------------
CheckResult stability_cross()
{
    CheckResult r{"8", "stability criteria vs drift eigenvalues", false, ""};
    int single_total = 0;
    int single_agree = 0;
    const auto kappas = Axis{"kappa", 1.0, 1000.0, 10, true}.values();
    const auto ratios = uniform_grid(-1.5, 1.5, 10);
    const auto loads = uniform_grid(0.1, 3.0, 10);
    for (double k : kappas) {
        for (double d : ratios) {
            for (double l : loads) {
                NormalizedParams p;
                p.kappa = k;
                p.kappa3 = 1.0;
                p.delta3 = 0.5;
                p.delta2p = d * k;
                p.Omega_m = std::sqrt(l * k / 4.0);
                const auto v = stability_single(p);
                if (std::abs(v.margin) < 1e-6) {
                    continue;
                }
                ++single_total;
                single_agree += v.stable == eigen_stable(build_model(p)).stable;
            }
        }
    }

    int coupled_total = 0;
    int coupled_agree = 0;
    for (double k : Axis{"kappa", 100.0, 1000.0, 10, true}.values()) {
        for (double k3 : uniform_grid(0.1, 10.0, 10)) {
            for (double l : uniform_grid(0.05, 2.0, 10)) {
                NormalizedParams p;
                p.kappa = k;
                p.kappa3 = k3;
                p.delta3 = 0.5;
                p.J = std::sqrt(k);
                p.delta2p = p.J * p.J / (p.delta3 + 1.0);
                p.gamma = 1e-5;
                p.Omega_m = std::sqrt(l * coupled_bound(p));
                const auto v = stability_coupled(p);
                if (!effective_params(p).regime_ok || std::abs(v.margin) < 1e-3) {
                    continue;
                }
                ++coupled_total;
                coupled_agree += v.stable == eigen_stable(build_model(p)).stable;
            }
        }
    }
    const double coupled_frac = coupled_total ? double(coupled_agree) / coupled_total : 0.0;
    r.passed = single_total > 0 && single_agree == single_total && coupled_total > 0 && coupled_frac >= 0.99;
    r.detail = "single " + std::to_string(single_agree) + "/" + std::to_string(single_total) + ", coupled " +
               std::to_string(coupled_agree) + "/" + std::to_string(coupled_total) +
               fmt(" (%.1f%%, need 99%%)", 100.0 * coupled_frac);
    return r;
}

// --- 9 -------------------------------------------------------------------------------
CheckResult enlargement()
{
    CheckResult r{"9", "coupled stability bound exceeds kappa/4", false, ""};
    std::mt19937_64 rng(77);
    int ok = 0;
    double worst_min = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double k = log_uniform(rng, 1.0, 1e4);
        const double k3 = log_uniform(rng, 1e-3, 1e2);
        const double s = s_min(k, k3);
        // bound(eta) = (4 + (k3 + eta^2 k)^2) / (16 eta^2) evaluated at its stationary point
        const double e = eta_min(k, k3);
        const double b = (4.0 + std::pow(k3 + e * e * k, 2)) / (16.0 * e * e);
        worst_min = std::max(worst_min, rel(s, b));
        ok += s > k / 4.0;
    }
    r.passed = ok == 1000 && worst_min < 1e-12;
    r.detail = std::to_string(ok) + "/1000 pairs with S_min > kappa/4" +
               fmt(", S_min vs bound(eta_min) %.2e", worst_min);
    return r;
}

// --- 10 ------------------------------------------------------------------------------
CheckResult thermal_limit()
{
    CheckResult r{"10", "uncoupled occupancy equals n_th + gamma_sc/gamma", false, ""};
    std::mt19937_64 rng(4242);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        NormalizedParams p;
        p.kappa = log_uniform(rng, 1.0, 1000.0);
        p.kappa3 = log_uniform(rng, 0.1, 10.0);
        p.J = uniform(rng, 0.0, 30.0);
        p.delta2p = uniform(rng, -100.0, 100.0);
        p.delta3 = uniform(rng, -5.0, 5.0);
        p.gamma = log_uniform(rng, 1e-6, 1e-2);
        p.gamma_sc = log_uniform(rng, 1e-6, 1e-2);
        p.n_th = uniform(rng, 0.0, 1000.0);
        p.Omega_m = 0.0;
        const double exact = p.n_th + p.gamma_sc / p.gamma;
        worst = std::max(worst, rel(solve_steady(build_model(p)).n_phonon, exact));
    }
    r.passed = worst < 1e-10;
    r.detail = fmt("max relative error %.3e (limit 1e-10)", worst);
    return r;
}

template <class F>
CheckResult guarded(const char* id, const char* name, F f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        return CheckResult{id, name, false, std::string("threw: ") + e.what()};
    }
}

}  // namespace

CheckResult acceptance_check(int n)
{
    switch (n) {
    case 1: return guarded("1", "Lorentzian reduction", lorentzian);
    case 2: return guarded("2", "self-energy identities", self_energy_identity);
    case 3: return guarded("3", "line shapes", lineshapes);
    case 4: return guarded("4", "blue optimum", blue_optimum);
    case 5: return guarded("5", "ground-state window", ground_state_window);
    case 6: return guarded("6", "monotonicity", monotonicity);
    case 7: return guarded("7", "oracle equivalence", oracle_equivalence);
    case 8: return guarded("8", "stability cross-validation", stability_cross);
    case 9: return guarded("9", "stability enlargement", enlargement);
    case 10: return guarded("10", "thermal limit", thermal_limit);
    default: throw ValidationError("no acceptance criterion " + std::to_string(n));
    }
}

std::vector<CheckResult> acceptance_checks()
{
    std::vector<CheckResult> out;
    for (int n = 1; n <= 10; ++n) {
        out.push_back(acceptance_check(n));
    }
    return out;
}

std::vector<CheckResult> invariant_checks()
{
    std::vector<CheckResult> out;

    out.push_back(guarded("inv-vacuum", "cavity vacuum variance 1/2", [] {
        NormalizedParams p = fig5_at(100.0);
        p.Omega_m = 0.0;
        const auto c = solve_steady(build_model(p));
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(c.V(i, i) - 0.5));
        }
        return CheckResult{"inv-vacuum", "cavity vacuum variance 1/2", worst < 1e-10, fmt("max |V_ii - 1/2| %.2e", worst)};
    }));

    out.push_back(guarded("inv-trace", "trace(A) = -(kappa + kappa3 + gamma)", [] {
        const NormalizedParams p = fig5_at(100.0);
        const double t = build_model(p).drift.trace();
        const double e = rel(t, -(p.kappa + p.kappa3 + p.gamma));
        return CheckResult{"inv-trace", "trace(A) = -(kappa + kappa3 + gamma)", e < 1e-13, fmt("relative error %.2e", e)};
    }));

    out.push_back(guarded("inv-spectrum-route", "s_ff equals drift-matrix response", [] {
        const NormalizedParams p = preset_point(find_preset("fig3d"), 0.0);
        double worst = 0.0;
        for (double w : uniform_grid(-20.0, 20.0, 81)) {
            worst = std::max(worst, rel(s_ff(w, p), model_force_spectrum(p, w)));
        }
        return CheckResult{"inv-spectrum-route", "s_ff equals drift-matrix response", worst < 1e-10,
                           fmt("max relative difference %.2e", worst)};
    }));

    out.push_back(guarded("inv-closed-form", "closed-form detuning J^2/(delta3 + 1)", [] {
        NormalizedParams p = fig5_at(100.0);
        const double d = optimal_detuning(p, DetuningSearch::closed_form);
        const double n = optimal_detuning(p, DetuningSearch::numeric);
        const bool ok = std::abs(d - 100.0 / 1.5) < 1e-12 && std::abs(n - d) <= 0.2 * d;
        return CheckResult{"inv-closed-form", "closed-form detuning J^2/(delta3 + 1)", ok,
                           fmt("closed %.4f", d) + fmt(", numeric %.4f", n)};
    }));

    out.push_back(guarded("inv-heating-suppression", "coupled A_+ below single-cavity A_+", [] {
        const NormalizedParams p = fig5_at(100.0);
        const double ratio = rates(p).A_plus / rates(single_cavity(p)).A_plus;
        return CheckResult{"inv-heating-suppression", "coupled A_+ below single-cavity A_+", ratio < 1.0,
                           fmt("A_+ ratio %.3e", ratio)};
    }));

    out.push_back(guarded("inv-fig5-stable", "fig5 preset at kappa = 100 is stable", [] {
        const auto e = eigen_stable(build_model(fig5_at(100.0)));
        return CheckResult{"inv-fig5-stable", "fig5 preset at kappa = 100 is stable", e.stable,
                           fmt("max Re(eigenvalue) %.3e", e.max_real_eigenvalue)};
    }));
    return out;
}

int print_checks(std::ostream& out, const std::vector<CheckResult>& checks)
{
    int failures = 0;
    for (const auto& c : checks) {
        failures += !c.passed;
        out << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << c.detail << "\n";
    }
    return failures;
}

}  // namespace levcool
