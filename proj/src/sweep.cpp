#include "levcool/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "levcool/cooling.hpp"
#include "levcool/errors.hpp"
#include "levcool/lyapunov.hpp"
#include "levcool/reduction.hpp"
#include "levcool/response.hpp"

namespace levcool {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

constexpr std::pair<Quantity, const char*> quantity_names[] = {
    {Quantity::S_ff, "S_ff"},
    {Quantity::A_minus, "A_minus"},
    {Quantity::A_plus, "A_plus"},
    {Quantity::Gamma_opt, "Gamma_opt"},
    {Quantity::spring_shift, "spring_shift"},
    {Quantity::n_q, "n_q"},
    {Quantity::n_c, "n_c"},
    {Quantity::n_f, "n_f"},
    {Quantity::stable, "stable"},
    {Quantity::max_re_eig, "max_re_eig"},
    {Quantity::eta, "eta"},
    {Quantity::Omega_eff, "Omega_eff"},
    {Quantity::kappa_eff, "kappa_eff"},
    {Quantity::Delta_eff, "Delta_eff"},
    {Quantity::margin_single, "margin_single"},
    {Quantity::margin_coupled, "margin_coupled"},
    {Quantity::n_lyapunov, "n_lyapunov"},
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

bool needs(const std::vector<Quantity>& qs, std::initializer_list<Quantity> any)
{
    return std::any_of(qs.begin(), qs.end(),
                       [&](Quantity q) { return std::find(any.begin(), any.end(), q) != any.end(); });
}

void add_flag(std::vector<std::string>& flags, const std::string& f)
{
    if (std::find(flags.begin(), flags.end(), f) == flags.end()) {
        flags.push_back(f);
    }
}

}  // namespace

std::vector<double> Axis::values() const
{
    if (!log) {
        return uniform_grid(lo, hi, count);
    }
    auto exps = uniform_grid(std::log10(lo), std::log10(hi), count);
    for (auto& e : exps) {
        e = std::pow(10.0, e);
    }
    exps.front() = lo;
    exps.back() = hi;
    return exps;
}

Axis parse_axis(const std::string& text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 5) {
        throw ValidationError("axis '" + text + "': expected name:lo:hi:n:lin|log");
    }
    Axis a;
    a.name = parts[0];
    if (a.name != "omega" && (!Config::is_key(a.name) || a.name == "omega_m_units")) {
        throw ValidationError("axis '" + text + "': unknown parameter '" + a.name + "'");
    }
    try {
        std::size_t used = 0;
        a.lo = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        a.hi = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        const long long n = std::stoll(parts[3], &used);
        if (used != parts[3].size() || n < 2) throw std::invalid_argument(parts[3]);
        a.count = static_cast<std::size_t>(n);
    } catch (const std::exception&) {
        throw ValidationError("axis '" + text + "': bad range or count (need finite lo < hi, n >= 2)");
    }
    if (parts[4] == "log") {
        a.log = true;
    } else if (parts[4] != "lin") {
        throw ValidationError("axis '" + text + "': scale must be 'lin' or 'log', got '" + parts[4] + "'");
    }
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || !(a.lo < a.hi)) {
        throw ValidationError("axis '" + text + "': need finite lo < hi");
    }
    if (a.log && !(a.lo > 0.0)) {
        throw ValidationError("axis '" + text + "': log axis needs lo > 0");
    }
    return a;
}

const char* to_string(Quantity q)
{
    for (const auto& [value, name] : quantity_names) {
        if (value == q) {
            return name;
        }
    }
    return "?";
}

Quantity parse_quantity(const std::string& name)
{
    for (const auto& [value, text] : quantity_names) {
        if (name == text) {
            return value;
        }
    }
    throw ValidationError("unknown quantity '" + name + "'");
}

std::vector<Quantity> parse_quantities(const std::string& list)
{
    std::vector<Quantity> out;
    for (const auto& item : split(list, ',')) {
        out.push_back(parse_quantity(item));
    }
    if (out.empty()) {
        throw ValidationError("quantity list is empty");
    }
    return out;
}

PointValues evaluate_point(const NormalizedParams& p, const std::vector<Quantity>& quantities, double omega)
{
    PointValues out;
    out.values.reserve(quantities.size());

    const bool want_cooling =
        needs(quantities, {Quantity::A_minus, Quantity::A_plus, Quantity::Gamma_opt, Quantity::spring_shift,
                           Quantity::n_q, Quantity::n_c, Quantity::n_f});
    const bool want_model = needs(quantities, {Quantity::stable, Quantity::max_re_eig, Quantity::n_lyapunov});
    const bool want_effective = needs(
        quantities, {Quantity::eta, Quantity::Omega_eff, Quantity::kappa_eff, Quantity::Delta_eff});

    CoolingReport cool;
    if (want_cooling) {
        cool = cooling_limit(p);
        if (!cool.cooling) {
            add_flag(out.flags, "not_cooling");
        }
    }
    EffectiveParams eff;
    if (want_effective) {
        eff = effective_params(p);
    }
    std::optional<LinearModel> model;
    EigenStability eig{};
    if (want_model) {
        model = build_model(p);
        eig = eigen_stable(*model);
        if (!eig.stable) {
            add_flag(out.flags, "unstable");
        }
    }

    for (const Quantity q : quantities) {
        double v = nan;
        switch (q) {
        case Quantity::S_ff: v = s_ff(omega, p); break;
        case Quantity::A_minus: v = cool.A_minus; break;
        case Quantity::A_plus: v = cool.A_plus; break;
        case Quantity::Gamma_opt: v = cool.Gamma_opt; break;
        case Quantity::spring_shift: v = cool.spring_shift; break;
        case Quantity::n_q: v = cool.n_q; break;
        case Quantity::n_c: v = cool.n_c; break;
        case Quantity::n_f: v = cool.n_f; break;
        case Quantity::stable: v = eig.stable ? 1.0 : 0.0; break;
        case Quantity::max_re_eig: v = eig.max_real_eigenvalue; break;
        case Quantity::eta: v = eff.eta; break;
        case Quantity::Omega_eff: v = eff.Omega_eff; break;
        case Quantity::kappa_eff: v = eff.kappa_eff; break;
        case Quantity::Delta_eff: v = eff.Delta_eff; break;
        case Quantity::margin_single: v = stability_single(p).margin; break;
        case Quantity::margin_coupled: v = stability_coupled(p).margin; break;
        case Quantity::n_lyapunov:
            if (eig.stable) {
                try {
                    v = solve_steady(*model).n_phonon;
                } catch (const IllConditionedError&) {
                    add_flag(out.flags, "ill_conditioned");
                }
            }
            break;
        }
        out.values.push_back(v);
    }
    return out;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body)
{
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_index = n;
    std::exception_ptr error;

    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

CsvTable run_sweep(const Config& base, const SweepSpec& spec, unsigned threads)
{
    if (spec.quantities.empty()) {
        throw ValidationError("sweep needs at least one quantity");
    }
    const bool has_omega =
        spec.axis1.name == "omega" || (spec.axis2 && spec.axis2->name == "omega");
    if (needs(spec.quantities, {Quantity::S_ff}) && !has_omega) {
        throw ValidationError("quantity S_ff needs an axis named 'omega'");
    }
    if (spec.axis2 && spec.axis2->name == spec.axis1.name) {
        throw ValidationError("sweep axes must name different parameters");
    }

    Config cfg = base;
    for (const auto& [key, value] : spec.overrides) {
        cfg.set(key, value);
    }

    const auto v1 = spec.axis1.values();
    const auto v2 = spec.axis2 ? spec.axis2->values() : std::vector<double>{0.0};
    const std::size_t n = v1.size() * v2.size();

    CsvTable table;
    table.columns.push_back(spec.axis1.name);
    if (spec.axis2) {
        table.columns.push_back(spec.axis2->name);
    }
    const bool coupled = !spec.single_only;
    const bool single = spec.single_only || spec.dual;
    for (const Quantity q : spec.quantities) {
        if (coupled) table.columns.emplace_back(to_string(q));
    }
    for (const Quantity q : spec.quantities) {
        if (single) table.columns.push_back(std::string(to_string(q)) + (coupled ? "_single" : ""));
    }
    table.columns.emplace_back("flag");
    table.rows.resize(n);

    parallel_for(n, threads, [&](std::size_t index) {
        const double a = v1[index / v2.size()];
        const double b = v2[index % v2.size()];
        Config local = cfg;
        double omega = 1.0;
        auto apply = [&](const Axis& axis, double value) {
            if (axis.name == "omega") {
                omega = value;
            } else {
                local.set_number(axis.name, value);
            }
        };
        apply(spec.axis1, a);
        if (spec.axis2) {
            apply(*spec.axis2, b);
        }
        const NormalizedParams p = local.resolve();

        CsvRow row;
        row.emplace_back(a);
        if (spec.axis2) {
            row.emplace_back(b);
        }
        std::vector<std::string> flags;
        if (coupled) {
            auto r = evaluate_point(p, spec.quantities, omega);
            row.insert(row.end(), r.values.begin(), r.values.end());
            flags.insert(flags.end(), r.flags.begin(), r.flags.end());
        }
        if (single) {
            auto r = evaluate_point(single_cavity(p), spec.quantities, omega);
            row.insert(row.end(), r.values.begin(), r.values.end());
            for (const auto& f : r.flags) {
                flags.push_back(coupled ? "single_" + f : f);
            }
        }
        std::string flag;
        for (const auto& f : flags) {
            flag += (flag.empty() ? "" : ";") + f;
        }
        row.emplace_back(flag.empty() ? std::string("ok") : flag);
        table.rows[index] = std::move(row);
    });
    return table;
}

}  // namespace levcool
