#ifndef LEVCOOL_SWEEP_HPP
#define LEVCOOL_SWEEP_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levcool/config.hpp"
#include "levcool/csv.hpp"

namespace levcool {

struct Axis {
    std::string name;  // a numeric config key, or "omega" for spectra
    double lo = 0.0;
    double hi = 1.0;
    std::size_t count = 2;
    bool log = false;

    std::vector<double> values() const;
};

// "name:lo:hi:n:lin|log"
Axis parse_axis(const std::string& text);

enum class Quantity {
    S_ff,
    A_minus,
    A_plus,
    Gamma_opt,
    spring_shift,
    n_q,
    n_c,
    n_f,
    stable,
    max_re_eig,
    eta,
    Omega_eff,
    kappa_eff,
    Delta_eff,
    margin_single,
    margin_coupled,
    n_lyapunov,
};

const char* to_string(Quantity q);
Quantity parse_quantity(const std::string& name);
// Comma-separated list; at least one entry.
std::vector<Quantity> parse_quantities(const std::string& list);

struct SweepSpec {
    Axis axis1;
    std::optional<Axis> axis2;
    std::vector<Quantity> quantities;
    // Also evaluate the single-cavity series (J = 0, delta2p = -kappa/2) as `<q>_single`.
    bool dual = false;
    // Evaluate only the single-cavity series.
    bool single_only = false;
    std::vector<std::pair<std::string, std::string>> overrides;
};

struct PointValues {
    std::vector<double> values;
    std::vector<std::string> flags;
};

// All requested quantities at one parameter point; failures become NaN plus a flag.
PointValues evaluate_point(const NormalizedParams& p, const std::vector<Quantity>& quantities, double omega);

// Columns: axis1 [, axis2], quantities [, quantities_single], flag.
// Rows in axis order (axis1 outer) regardless of worker completion order.
CsvTable run_sweep(const Config& base, const SweepSpec& spec, unsigned threads = 0);

// Runs body(i) for i in [0, n) on up to `threads` workers (0 = hardware concurrency).
// The exception from the lowest failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace levcool

#endif  // LEVCOOL_SWEEP_HPP
