#include "levcool/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "levcool/config.hpp"
#include "levcool/cooling.hpp"
#include "levcool/csv.hpp"
#include "levcool/errors.hpp"
#include "levcool/lyapunov.hpp"
#include "levcool/presets.hpp"
#include "levcool/reduction.hpp"
#include "levcool/response.hpp"
#include "levcool/sweep.hpp"
#include "levcool/validation.hpp"

namespace levcool::cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct Options {
    std::string config;
    std::string out;
    std::string id;
    std::string axis1;
    std::string axis2;
    std::string quantity;
    std::vector<std::string> set;
    bool single_cavity = false;
    bool dual = false;
    unsigned threads = 0;
};

Config load(const Options& o)
{
    Config c = o.config.empty() ? Config{} : load_config(o.config);
    for (const auto& assignment : o.set) {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("--set expects key=value, got '" + assignment + "'");
        }
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        c.set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
    }
    return c;
}

NormalizedParams finish(NormalizedParams p, const Options& o)
{
    return o.single_cavity ? single_cavity(p) : p;
}

// Parameter points along --axis1 (config keys only), or the single configured point.
std::vector<NormalizedParams> points(const Config& base, const Options& o)
{
    if (!o.axis2.empty()) {
        throw ValidationError("this subcommand takes only --axis1; use 'sweep' for two axes");
    }
    if (o.axis1.empty()) {
        return {finish(base.resolve(), o)};
    }
    const Axis a = parse_axis(o.axis1);
    if (a.name == "omega") {
        throw ValidationError("axis 'omega' only applies to spectrum and sweep");
    }
    std::vector<NormalizedParams> ps;
    for (double v : a.values()) {
        Config c = base;
        c.set_number(a.name, v);
        ps.push_back(finish(c.resolve(), o));
    }
    return ps;
}

void emit(const CsvTable& t, const Options& o, std::ostream& out)
{
    if (o.out.empty()) {
        write_csv(out, t);
    } else {
        emit_csv(t, o.out);
    }
}

CsvRow cooling_row(const NormalizedParams& p)
{
    const auto c = cooling_limit(p);
    return {p.kappa, p.delta2p, c.A_minus, c.A_plus, c.Gamma_opt, c.n_q, c.n_c, c.n_f,
            std::string(c.cooling ? "ok" : "not_cooling")};
}

const std::vector<std::string> cooling_columns = {"kappa", "delta2p", "A_minus", "A_plus", "Gamma_opt",
                                                  "n_q", "n_c", "n_f", "flag"};
const std::vector<std::string> reduction_columns = {"kappa", "kappa3", "J", "delta2p", "eta",
                                                    "Omega_eff", "kappa_eff", "Delta_eff", "stable", "margin"};

CsvRow reduction_row(const NormalizedParams& p, const EffectiveParams& e, bool stable, double margin)
{
    return {p.kappa, p.kappa3, p.J, p.delta2p, e.eta, e.Omega_eff, e.kappa_eff, e.Delta_eff,
            std::int64_t{stable ? 1 : 0}, margin};
}

int cmd_spectrum(const Options& o, std::ostream& out)
{
    const Config base = load(o);
    const NormalizedParams p = finish(base.resolve(), o);
    const Axis a = o.axis1.empty() ? Axis{"omega", -50.0, 50.0, 4001, false} : parse_axis(o.axis1);
    if (a.name != "omega") {
        throw ValidationError("spectrum axis must be 'omega', got '" + a.name + "'");
    }
    CsvTable t;
    t.columns = {"omega", "S"};
    for (double w : a.values()) {
        t.rows.push_back({w, s_ff(w, p)});
    }
    emit(t, o, out);
    return exit_ok;
}

int cmd_rates(const Options& o, std::ostream& out)
{
    CsvTable t;
    t.columns = cooling_columns;
    for (const auto& p : points(load(o), o)) {
        t.rows.push_back(cooling_row(p));
    }
    emit(t, o, out);
    return exit_ok;
}

// Cooling report at the numerically optimal delta2p (argmin n_f).
int cmd_limit(const Options& o, std::ostream& out)
{
    CsvTable t;
    t.columns = cooling_columns;
    for (NormalizedParams p : points(load(o), o)) {
        if (!o.single_cavity) {
            p.delta2p = optimal_detuning(p, DetuningSearch::numeric);
        }
        t.rows.push_back(cooling_row(p));
    }
    emit(t, o, out);
    return exit_ok;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    if (o.axis1.empty()) {
        throw ValidationError("sweep needs --axis1");
    }
    SweepSpec spec;
    spec.axis1 = parse_axis(o.axis1);
    if (!o.axis2.empty()) {
        spec.axis2 = parse_axis(o.axis2);
    }
    spec.quantities = parse_quantities(o.quantity.empty() ? std::string("n_f") : o.quantity);
    spec.dual = o.dual;
    spec.single_only = o.single_cavity;
    if (o.dual && o.single_cavity) {
        throw ValidationError("--dual and --single-cavity are exclusive");
    }
    emit(run_sweep(load(o), spec, o.threads), o, out);
    return exit_ok;
}

int cmd_stability(const Options& o, std::ostream& out)
{
    CsvTable t;
    t.columns = reduction_columns;
    for (const char* extra : {"criterion", "criterion_stable", "max_re_eig"}) {
        t.columns.emplace_back(extra);
    }
    for (const auto& p : points(load(o), o)) {
        const auto e = effective_params(p);
        const auto eig = eigen_stable(build_model(p));
        const auto v = p.J == 0.0 ? stability_single(p) : stability_coupled(p);
        CsvRow row = reduction_row(p, e, eig.stable, v.margin);
        row.emplace_back(std::string(to_string(v.criterion)));
        row.emplace_back(std::int64_t{v.stable ? 1 : 0});
        row.emplace_back(eig.max_real_eigenvalue);
        t.rows.push_back(std::move(row));
    }
    emit(t, o, out);
    return exit_ok;
}

int cmd_effective(const Options& o, std::ostream& out)
{
    CsvTable t;
    t.columns = reduction_columns;
    t.columns.emplace_back("regime_ok");
    t.columns.emplace_back("far_detuned");
    for (const auto& p : points(load(o), o)) {
        const auto e = effective_params(p);
        const auto v = stability_coupled(p);
        CsvRow row = reduction_row(p, e, v.stable, v.margin);
        row.emplace_back(std::int64_t{e.regime_ok ? 1 : 0});
        row.emplace_back(std::int64_t{e.diagnostics.far_detuned ? 1 : 0});
        t.rows.push_back(std::move(row));
    }
    emit(t, o, out);
    return exit_ok;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    const Config base = load(o);
    std::vector<NormalizedParams> ps;
    if (o.axis1.empty()) {
        for (double om : {0.25, 0.1, 0.05, 0.025}) {
            Config c = base;
            c.set_number("Omega_m", om);
            ps.push_back(finish(c.resolve(), o));
        }
    } else {
        ps = points(base, o);
    }
    CsvTable t;
    t.columns = {"kappa", "Omega_m", "n_f_formula", "n_lyapunov", "rel_dev", "stable", "flag"};
    for (const auto& p : ps) {
        try {
            const auto r = oracle_compare(p);
            t.rows.push_back({r.kappa, r.Omega_m, r.n_f_formula, r.n_lyapunov, r.rel_dev,
                              std::int64_t{r.stable ? 1 : 0}, std::string("ok")});
        } catch (const NotCoolingError&) {
            t.rows.push_back({p.kappa, p.Omega_m, nan, nan, nan, std::int64_t{-1}, std::string("not_cooling")});
        } catch (const UnstableError&) {
            t.rows.push_back({p.kappa, p.Omega_m, nan, nan, nan, std::int64_t{0}, std::string("unstable")});
        }
    }
    emit(t, o, out);
    return exit_ok;
}

int cmd_figure(const Options& o, std::ostream& out)
{
    if (o.id.empty()) {
        throw ValidationError("figure needs --id (one of fig3a..fig3f, fig4a, fig4b, fig5a, fig5b, fig6a, fig6b)");
    }
    const FigurePreset& f = find_preset(o.id);
    const CsvTable t = compute_figure(f, o.threads);
    if (o.out.empty()) {
        write_csv(out, t);
        return exit_ok;
    }
    emit_csv(t, o.out);
    std::filesystem::path gp = o.out;
    gp.replace_extension(".gp");
    std::ofstream script(gp, std::ios::binary);
    script << plot_script(f, std::filesystem::path(o.out).filename().string());
    if (!script) {
        throw std::runtime_error("cannot write plot script '" + gp.string() + "'");
    }
    return exit_ok;
}

int cmd_selftest(std::ostream& out)
{
    auto checks = acceptance_checks();
    const auto inv = invariant_checks();
    checks.insert(checks.end(), inv.begin(), inv.end());
    const int failed = print_checks(out, checks);
    out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? exit_ok : exit_checks_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"levcool: coupled-cavity cooling of a levitated nanosphere"};
    app.name("levcool");
    Options o;
    app.add_option("--config", o.config, "key = value parameter file");
    app.add_option("--out", o.out, "CSV output path (stdout when absent)");
    app.add_option("--id", o.id, "figure preset id");
    app.add_option("--axis1", o.axis1, "name:lo:hi:n:lin|log");
    app.add_option("--axis2", o.axis2, "second sweep axis");
    app.add_option("--quantity", o.quantity, "comma-separated sweep quantities");
    app.add_option("--set", o.set, "override a config key (key=value), repeatable");
    app.add_flag("--single-cavity", o.single_cavity, "J = 0 at delta2p = -kappa/2");
    app.add_flag("--dual", o.dual, "sweep: add single-cavity columns");
    app.add_option("--threads", o.threads, "sweep workers (0 = all cores)");
    app.allow_extras();

    const std::pair<const char*, const char*> commands[] = {
        {"spectrum", "force noise spectrum S(omega)"},
        {"rates", "sideband rates and final occupancy at the configured point"},
        {"limit", "cooling limit at the optimal delta2p"},
        {"sweep", "1D/2D parameter sweep"},
        {"stability", "analytic criteria vs drift-matrix eigenvalues"},
        {"effective", "effective two-mode parameters"},
        {"oracle", "perturbative n_f vs exact steady-state covariance"},
        {"figure", "preset figure data plus gnuplot script"},
        {"selftest", "acceptance and invariant checks"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    }

    std::vector<std::string> extras = app.remaining();
    for (const auto* sub : app.get_subcommands()) {
        const auto more = sub->remaining();
        extras.insert(extras.end(), more.begin(), more.end());
    }
    if (app.get_subcommands().empty()) {
        err << "error: " << (extras.empty() ? std::string("a subcommand is required")
                                             : "unknown subcommand '" + extras.front() + "'")
            << "\n";
        return exit_validation;
    }
    if (!extras.empty()) {
        err << "error: unexpected argument '" << extras.front() << "'\n";
        return exit_validation;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "spectrum") return cmd_spectrum(o, out);
        if (cmd == "rates") return cmd_rates(o, out);
        if (cmd == "limit") return cmd_limit(o, out);
        if (cmd == "sweep") return cmd_sweep(o, out);
        if (cmd == "stability") return cmd_stability(o, out);
        if (cmd == "effective") return cmd_effective(o, out);
        if (cmd == "oracle") return cmd_oracle(o, out);
        if (cmd == "figure") return cmd_figure(o, out);
        return cmd_selftest(out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    }
}

}  // namespace levcool::cli
