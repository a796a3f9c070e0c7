#ifndef LEVCOOL_PRESETS_HPP
#define LEVCOOL_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "levcool/csv.hpp"
#include "levcool/params.hpp"
#include "levcool/sweep.hpp"

namespace levcool {

enum class PresetKind {
    spectrum,  // S vs omega, coupled and single cavity at the same delta2p
    rate_map,  // Gamma_opt over (kappa, delta2p)
    limit_vs_J,  // n_f vs J with kappa = J^2
    limit_vs_kappa,  // n_f vs kappa, coupled and single
    limit_family,  // n_f vs axis for a family of a second parameter
};

enum class FamilyParam { none, radius_nm, kappa };

struct FigurePreset {
    std::string id;
    std::string title;
    PresetKind kind = PresetKind::spectrum;

    // Caption values, units of omega_m. Fields overwritten per point by an axis or by a
    // rule below keep the caption's nominal value here (or 0 when the caption has none).
    NormalizedParams fixed;
    bool J_sqrt_kappa = false;  // J = sqrt(kappa omega_m)
    bool kappa_from_J = false;  // kappa = J^2 / omega_m
    bool delta2p_closed_form = false;  // delta2p = J^2 / (delta3 + omega_m)
    std::optional<double> radius_nm;  // gamma_sc from the sphere radius (lambda = 1 um, eps = 2)

    Axis axis1;
    std::optional<Axis> axis2;
    FamilyParam family_param = FamilyParam::none;
    std::vector<double> family;

    std::string x_label;
    std::string y_label;
};

const std::vector<FigurePreset>& figure_presets();
// Throws ValidationError naming the id when unknown.
const FigurePreset& find_preset(const std::string& id);

// Coupled-cavity parameters of the preset at axis values (a, b); `member` selects the
// family entry for limit_family presets.
NormalizedParams preset_point(const FigurePreset& preset, double a, double b = 0.0, double member = 0.0);

// Single-cavity counterpart used for the dashed/comparison series: spectra keep delta2p,
// limits move to the Lorentzian optimum delta2p = -kappa/2; J = 0 in both.
NormalizedParams preset_single(const FigurePreset& preset, const NormalizedParams& coupled);

CsvTable compute_figure(const FigurePreset& preset, unsigned threads = 0);

// gnuplot script plotting `csv_name` (path as it should appear in the script).
std::string plot_script(const FigurePreset& preset, const std::string& csv_name);

}  // namespace levcool

#endif  // LEVCOOL_PRESETS_HPP
