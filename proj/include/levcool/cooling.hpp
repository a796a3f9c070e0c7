#ifndef LEVCOOL_COOLING_HPP
#define LEVCOOL_COOLING_HPP

#include <functional>

#include "levcool/params.hpp"

namespace levcool {

struct SidebandRates {
    double A_minus;  // cooling, S_FF(+omega_m) x_zpf^2
    double A_plus;  // heating, S_FF(-omega_m) x_zpf^2
};

// All rates in units of omega_m.
SidebandRates rates(const NormalizedParams& p);
double net_rate(const NormalizedParams& p);
double spring_shift(const NormalizedParams& p);

struct CoolingReport {
    double A_minus = 0.0;
    double A_plus = 0.0;
    double Gamma_opt = 0.0;
    double spring_shift = 0.0;
    // Occupancies are NaN unless cooling is true.
    double n_q = 0.0;
    double n_c = 0.0;
    double n_f = 0.0;
    bool cooling = false;  // Gamma_opt > 0

    // Throws NotCoolingError when !cooling.
    const CoolingReport& ensure_cooling() const;
};

// Steady-state phonon limit n_f = A_+/Gamma_opt + gamma_sc/Gamma_opt. The mechanical
// bath term is not part of this limit.
CoolingReport cooling_limit(const NormalizedParams& p);

enum class DetuningSearch { closed_form, numeric };

struct DetuningScan {
    double span_in_kappa = 3.0;  // scan delta2p over [-span*kappa, +span*kappa]
    std::size_t points = 2001;
    double tolerance = 1e-6;
};

// closed_form: J^2 / (delta3 + omega_m). numeric: argmin of n_f over delta2p.
// numeric throws NoCoolingWindowError when Gamma_opt <= 0 across the scan.
double optimal_detuning(const NormalizedParams& p, DetuningSearch mode, const DetuningScan& scan = {});

// argmax of Gamma_opt over delta2p, same scan and polish as the numeric optimum.
double max_cooling_rate_detuning(const NormalizedParams& p, const DetuningScan& scan = {});

// Grid scan of f on [lo, hi] followed by golden-section polish of the best bracket.
// Non-finite values of f are skipped. Returns NaN when no finite sample exists.
double scan_minimize(const std::function<double(double)>& f, double lo, double hi, std::size_t points,
                     double tolerance);

}  // namespace levcool

#endif  // LEVCOOL_COOLING_HPP
