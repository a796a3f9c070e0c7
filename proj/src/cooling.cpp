#include "levcool/cooling.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "levcool/errors.hpp"
#include "levcool/response.hpp"

namespace levcool {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double golden_section(const std::function<double(double)>& f, double a, double b, double tolerance)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (std::abs(b - a) > tolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

SidebandRates rates(const NormalizedParams& p)
{
    p.validate();
    return {s_ff(1.0, p), s_ff(-1.0, p)};
}

double net_rate(const NormalizedParams& p)
{
    const auto r = rates(p);
    return r.A_minus - r.A_plus;
}

double spring_shift(const NormalizedParams& p)
{
    p.validate();
    return self_energy(1.0, p).real();
}

const CoolingReport& CoolingReport::ensure_cooling() const
{
    if (!cooling) {
        throw NotCoolingError(Gamma_opt);
    }
    return *this;
}

CoolingReport cooling_limit(const NormalizedParams& p)
{
    const auto r = rates(p);
    CoolingReport rep;
    rep.A_minus = r.A_minus;
    rep.A_plus = r.A_plus;
    rep.Gamma_opt = r.A_minus - r.A_plus;
    rep.spring_shift = spring_shift(p);
    rep.cooling = rep.Gamma_opt > 0.0;
    if (rep.cooling) {
        rep.n_q = rep.A_plus / rep.Gamma_opt;
        rep.n_c = p.gamma_sc / rep.Gamma_opt;
        rep.n_f = rep.n_q + rep.n_c;
    } else {
        rep.n_q = rep.n_c = rep.n_f = nan;
    }
    return rep;
}

double scan_minimize(const std::function<double(double)>& f, double lo, double hi, std::size_t points,
                     double tolerance)
{
    const auto grid = uniform_grid(lo, hi, points);
    std::vector<double> values(grid.size());
    std::size_t best = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = f(grid[i]);
        if (std::isfinite(values[i]) && (best == grid.size() || values[i] < values[best])) {
            best = i;
        }
    }
    if (best == grid.size()) {
        return nan;
    }
    const double a = grid[best == 0 ? 0 : best - 1];
    const double b = grid[best + 1 == grid.size() ? best : best + 1];
    auto guarded = [&](double x) {
        const double v = f(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    const double polished = golden_section(guarded, a, b, tolerance);
    return guarded(polished) <= values[best] ? polished : grid[best];
}

double optimal_detuning(const NormalizedParams& p, DetuningSearch mode, const DetuningScan& scan)
{
    p.validate();
    if (mode == DetuningSearch::closed_form) {
        if (p.delta3 + 1.0 == 0.0) {
            throw ValidationError("closed-form optimum undefined for delta3 = -omega_m");
        }
        return p.J * p.J / (p.delta3 + 1.0);
    }
    auto occupancy = [p](double d2) {
        NormalizedParams q = p;
        q.delta2p = d2;
        const auto rep = cooling_limit(q);
        return rep.cooling ? rep.n_f : nan;
    };
    const double span = scan.span_in_kappa * p.kappa;
    const double best = scan_minimize(occupancy, -span, span, scan.points, scan.tolerance);
    if (std::isnan(best)) {
        throw NoCoolingWindowError();
    }
    return best;
}

double max_cooling_rate_detuning(const NormalizedParams& p, const DetuningScan& scan)
{
    p.validate();
    auto negative_rate = [p](double d2) {
        NormalizedParams q = p;
        q.delta2p = d2;
        return -net_rate(q);
    };
    const double span = scan.span_in_kappa * p.kappa;
    return scan_minimize(negative_rate, -span, span, scan.points, scan.tolerance);
}

}  // namespace levcool
