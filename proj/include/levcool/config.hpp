#ifndef LEVCOOL_CONFIG_HPP
#define LEVCOOL_CONFIG_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "levcool/params.hpp"

namespace levcool {

enum class RateUnits { normalized, si };
enum class JRule { fixed, sqrt_kappa, input_output };
enum class DetuningRule { fixed, closed_form, effective_sideband };

// Parsed `key = value` configuration. Rates are stored as given and converted on
// resolve(); symbolic J / delta2p values are re-evaluated whenever their inputs change.
class Config {
public:
    // Every accepted key, in documentation order.
    static const std::vector<std::string>& keys();
    static bool is_key(std::string_view key);

    // Applies one assignment; throws ValidationError naming the key on bad input.
    void set(const std::string& key, const std::string& value);
    void set_number(const std::string& key, double value);

    bool has(const std::string& key) const { return present_.count(key) != 0; }

    // Throws ValidationError when the combination is inconsistent or invalid.
    NormalizedParams resolve() const;

    RateUnits units() const { return units_; }
    JRule j_rule() const { return j_rule_; }
    DetuningRule detuning_rule() const { return detuning_rule_; }
    void set_j_rule(JRule rule) { j_rule_ = rule; }
    void set_detuning_rule(DetuningRule rule) { detuning_rule_ = rule; }

    // Sphere/cavity geometry from the physical keys, defaults for absent ones.
    PhysicalParams physical() const;
    bool has_geometry() const;

private:
    double rate(double value) const;

    RateUnits units_ = RateUnits::normalized;
    std::optional<double> omega_m_;
    JRule j_rule_ = JRule::fixed;
    DetuningRule detuning_rule_ = DetuningRule::fixed;

    double delta2p_ = 0.0;
    double delta3_ = 0.5;
    double kappa_ = 100.0;
    double kappa3_ = 1.0;
    double J_ = 0.0;
    double Omega_m_ = 0.25;
    double gamma_ = 1e-5;
    double gamma_sc_ = 0.0;
    double n_th_ = 0.0;

    std::optional<double> radius_nm_;
    double density_ = constants::silica_density;
    double epsilon_ = 2.0;
    double lambda_um_ = 1.0;
    double cavity_length_cm_ = 1.0;
    double waist_um_ = 25.0;

    std::set<std::string> present_;
};

// Reads `key = value` lines; '#' starts a comment; unknown or repeated keys are errors.
Config parse_config(std::istream& in, const std::string& source = "<config>");
Config load_config(const std::filesystem::path& path);

}  // namespace levcool

#endif  // LEVCOOL_CONFIG_HPP
