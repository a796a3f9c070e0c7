#include "levcool/presets.hpp"

#include <cmath>
#include <sstream>

#include "levcool/cooling.hpp"
#include "levcool/errors.hpp"
#include "levcool/response.hpp"

namespace levcool {

namespace {

Axis axis(std::string name, double lo, double hi, std::size_t n, bool log)
{
    return Axis{std::move(name), lo, hi, n, log};
}

NormalizedParams caption_base()
{
    NormalizedParams p;
    p.delta3 = 0.5;
    p.kappa3 = 1.0;
    p.Omega_m = 0.25;
    p.gamma = 1e-5;
    return p;
}

FigurePreset spectrum_preset(std::string id, double delta2p, bool detail)
{
    FigurePreset f;
    f.id = std::move(id);
    f.kind = PresetKind::spectrum;
    f.fixed = caption_base();
    f.fixed.delta2p = delta2p;
    f.fixed.kappa = 100.0;
    f.fixed.J = 10.0;
    f.fixed.Omega_m = 5.0;
    f.axis1 = detail ? axis("omega", -15.0, 15.0, 4001, false) : axis("omega", -300.0, 300.0, 4001, false);
    std::ostringstream t;
    t << "force spectrum, delta2p = " << delta2p << (detail ? " (detail)" : "");
    f.title = t.str();
    f.x_label = "omega / omega_m";
    f.y_label = "S_FF x_zpf^2 / omega_m";
    return f;
}

FigurePreset rate_preset(std::string id, bool coupled)
{
    FigurePreset f;
    f.id = std::move(id);
    f.kind = PresetKind::rate_map;
    f.fixed = caption_base();
    f.J_sqrt_kappa = coupled;
    f.axis1 = axis("kappa", 1.0, 200.0, 100, false);
    f.axis2 = axis("delta2p", -200.0, 200.0, 201, false);
    f.title = coupled ? "net cooling rate, coupled cavities" : "net cooling rate, single cavity";
    f.x_label = "kappa / omega_m";
    f.y_label = "delta2p / omega_m";
    return f;
}

std::vector<FigurePreset> build_presets()
{
    std::vector<FigurePreset> all;
    all.push_back(spectrum_preset("fig3a", 100.0, false));
    all.push_back(spectrum_preset("fig3b", 100.0, true));
    all.push_back(spectrum_preset("fig3c", 0.0, false));
    all.push_back(spectrum_preset("fig3d", 0.0, true));
    all.push_back(spectrum_preset("fig3e", -100.0, false));
    all.push_back(spectrum_preset("fig3f", -100.0, true));
    all.push_back(rate_preset("fig4a", false));
    all.push_back(rate_preset("fig4b", true));

    {
        FigurePreset f;
        f.id = "fig5a";
        f.kind = PresetKind::limit_vs_J;
        f.fixed = caption_base();
        f.fixed.delta2p = 1.0;
        f.kappa_from_J = true;
        f.radius_nm = 50.0;
        f.axis1 = axis("J", 0.5, 20.0, 196, false);
        f.title = "cooling limit vs tunnelling, kappa = J^2";
        f.x_label = "J / omega_m";
        f.y_label = "n_f";
        all.push_back(f);
    }
    {
        FigurePreset f;
        f.id = "fig5b";
        f.kind = PresetKind::limit_vs_kappa;
        f.fixed = caption_base();
        f.J_sqrt_kappa = true;
        f.delta2p_closed_form = true;
        f.radius_nm = 50.0;
        f.axis1 = axis("kappa", 1.0, 1000.0, 200, true);
        f.title = "cooling limit vs kappa";
        f.x_label = "kappa / omega_m";
        f.y_label = "n_f";
        all.push_back(f);
    }
    {
        FigurePreset f;
        f.id = "fig6a";
        f.kind = PresetKind::limit_family;
        f.fixed = caption_base();
        f.J_sqrt_kappa = true;
        f.delta2p_closed_form = true;
        f.axis1 = axis("kappa", 1.0, 1000.0, 200, true);
        f.family_param = FamilyParam::radius_nm;
        f.family = {25.0, 50.0, 75.0, 100.0};
        f.title = "cooling limit vs kappa for several radii";
        f.x_label = "kappa / omega_m";
        f.y_label = "n_f";
        all.push_back(f);
    }
    {
        FigurePreset f;
        f.id = "fig6b";
        f.kind = PresetKind::limit_family;
        f.fixed = caption_base();
        f.J_sqrt_kappa = true;
        f.delta2p_closed_form = true;
        f.radius_nm = 50.0;
        f.axis1 = axis("kappa3", 0.1, 10.0, 200, true);
        f.family_param = FamilyParam::kappa;
        f.family = {20.0, 50.0, 100.0, 200.0};
        f.title = "cooling limit vs auxiliary damping for several kappa";
        f.x_label = "kappa3 / omega_m";
        f.y_label = "n_f";
        all.push_back(f);
    }
    return all;
}

double radius_gamma_sc(double radius_nm)
{
    return gamma_sc(radius_nm * 1e-9, 2.0, 1e-6);
}

std::string member_label(const FigurePreset& f, double member)
{
    std::ostringstream s;
    s << (f.family_param == FamilyParam::radius_nm ? "r" : "kappa") << member
      << (f.family_param == FamilyParam::radius_nm ? "nm" : "");
    return s.str();
}

void set_axis(NormalizedParams& p, const std::string& name, double v)
{
    if (name == "kappa") p.kappa = v;
    else if (name == "kappa3") p.kappa3 = v;
    else if (name == "delta2p") p.delta2p = v;
    else if (name == "J") p.J = v;
    else if (name != "omega") throw ValidationError("preset axis '" + name + "' not supported");
}

std::string join_flags(const std::vector<std::string>& flags)
{
    std::string out;
    for (const auto& f : flags) {
        out += (out.empty() ? "" : ";") + f;
    }
    return out.empty() ? "ok" : out;
}

}  // namespace

const std::vector<FigurePreset>& figure_presets()
{
    static const std::vector<FigurePreset> all = build_presets();
    return all;
}

const FigurePreset& find_preset(const std::string& id)
{
    for (const auto& f : figure_presets()) {
        if (f.id == id) {
            return f;
        }
    }
    throw ValidationError("unknown figure preset '" + id + "'");
}

NormalizedParams preset_point(const FigurePreset& f, double a, double b, double member)
{
    NormalizedParams p = f.fixed;
    set_axis(p, f.axis1.name, a);
    if (f.axis2) {
        set_axis(p, f.axis2->name, b);
    }
    if (f.family_param == FamilyParam::kappa) {
        p.kappa = member;
    }
    if (f.kappa_from_J) {
        p.kappa = p.J * p.J;
    }
    if (f.J_sqrt_kappa) {
        p.J = j_sqrt_kappa(p.kappa);
    }
    if (f.delta2p_closed_form) {
        p.delta2p = p.J * p.J / (p.delta3 + 1.0);
    }
    if (f.family_param == FamilyParam::radius_nm) {
        p.gamma_sc = radius_gamma_sc(member);
    } else if (f.radius_nm) {
        p.gamma_sc = radius_gamma_sc(*f.radius_nm);
    }
    p.validate();
    return p;
}

NormalizedParams preset_single(const FigurePreset& f, const NormalizedParams& coupled)
{
    if (f.kind == PresetKind::spectrum || f.kind == PresetKind::rate_map) {
        NormalizedParams s = coupled;
        s.J = 0.0;
        return s;
    }
    return single_cavity(coupled);
}

CsvTable compute_figure(const FigurePreset& f, unsigned threads)
{
    CsvTable t;
    const auto xs = f.axis1.values();

    switch (f.kind) {
    case PresetKind::spectrum: {
        t.columns = {"omega", "S", "S_single"};
        const NormalizedParams p = preset_point(f, 0.0);
        const NormalizedParams s = preset_single(f, p);
        for (double w : xs) {
            t.rows.push_back({w, s_ff(w, p), s_ff(w, s)});
        }
        break;
    }
    case PresetKind::rate_map: {
        t.columns = {f.axis1.name, f.axis2->name, "Gamma_opt", "A_minus", "A_plus", "flag"};
        const auto ys = f.axis2->values();
        t.rows.resize(xs.size() * ys.size());
        parallel_for(t.rows.size(), threads, [&](std::size_t i) {
            const double a = xs[i / ys.size()];
            const double b = ys[i % ys.size()];
            NormalizedParams p = preset_point(f, a, b);
            if (!f.J_sqrt_kappa) {
                p = preset_single(f, p);
            }
            const auto r = rates(p);
            const double g = r.A_minus - r.A_plus;
            t.rows[i] = {a, b, g, r.A_minus, r.A_plus, std::string(g > 0.0 ? "ok" : "not_cooling")};
        });
        break;
    }
    case PresetKind::limit_vs_J:
    case PresetKind::limit_vs_kappa: {
        t.columns = {f.axis1.name, "n_f", "n_f_single", "Gamma_opt", "Gamma_opt_single", "delta2p", "flag"};
        t.rows.resize(xs.size());
        parallel_for(xs.size(), threads, [&](std::size_t i) {
            const NormalizedParams p = preset_point(f, xs[i]);
            const NormalizedParams s = preset_single(f, p);
            const auto c = cooling_limit(p);
            const auto cs = cooling_limit(s);
            std::vector<std::string> flags;
            if (!c.cooling) flags.emplace_back("not_cooling");
            if (!cs.cooling) flags.emplace_back("single_not_cooling");
            t.rows[i] = {xs[i], c.n_f, cs.n_f, c.Gamma_opt, cs.Gamma_opt, p.delta2p, join_flags(flags)};
        });
        break;
    }
    case PresetKind::limit_family: {
        t.columns = {f.axis1.name};
        for (double m : f.family) {
            t.columns.push_back("n_f_" + member_label(f, m));
        }
        t.columns.emplace_back("flag");
        t.rows.resize(xs.size());
        parallel_for(xs.size(), threads, [&](std::size_t i) {
            CsvRow row{xs[i]};
            std::vector<std::string> flags;
            for (double m : f.family) {
                const auto c = cooling_limit(preset_point(f, xs[i], 0.0, m));
                row.emplace_back(c.n_f);
                if (!c.cooling) flags.push_back(member_label(f, m) + ":not_cooling");
            }
            row.emplace_back(join_flags(flags));
            t.rows[i] = std::move(row);
        });
        break;
    }
    }
    return t;
}

std::string plot_script(const FigurePreset& f, const std::string& csv_name)
{
    std::ostringstream g;
    g << "# " << f.id << ": " << f.title << "\n";
    g << "set datafile separator ','\n";
    g << "set key autotitle columnhead\n";
    g << "set xlabel '" << f.x_label << "'\n";
    g << "set ylabel '" << f.y_label << "'\n";
    if (f.axis1.log) {
        g << "set logscale x\n";
    }
    const std::string src = "'" + csv_name + "'";

    switch (f.kind) {
    case PresetKind::spectrum:
        g << "plot " << src << " using 1:2 with lines lw 2 title 'coupled', \\\n"
          << "     " << src << " using 1:3 with lines dt 2 title 'single'\n";
        break;
    case PresetKind::rate_map:
        g << "set view map\n"
          << "set cblabel 'Gamma_opt / omega_m'\n"
          << "plot " << src << " using 1:2:3 with image notitle\n";
        break;
    case PresetKind::limit_vs_J:
    case PresetKind::limit_vs_kappa:
        g << "set logscale y\n"
          << "set object 1 rect from graph 0, first 1e-6 to graph 1, first 1 fc rgb '#dddddd' behind\n"
          << "plot " << src << " using 1:2 with lines lw 2 title 'coupled', \\\n"
          << "     " << src << " using 1:3 with lines dt 2 title 'single'\n";
        break;
    case PresetKind::limit_family:
        g << "set logscale y\n"
          << "set object 1 rect from graph 0, first 1e-6 to graph 1, first 1 fc rgb '#dddddd' behind\n"
          << "plot ";
        for (std::size_t k = 0; k < f.family.size(); ++k) {
            g << (k ? ", \\\n     " : "") << src << " using 1:" << k + 2 << " with lines lw 2";
        }
        g << "\n";
        break;
    }
    return g.str();
}

}  // namespace levcool
