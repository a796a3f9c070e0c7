#include "levcool/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "levcool/errors.hpp"
#include "levcool/reduction.hpp"

namespace levcool {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& key, const std::string& text)
{
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw ValidationError("config key '" + key + "': expected a finite number, got '" + text + "'");
    }
    return v;
}

}  // namespace

const std::vector<std::string>& Config::keys()
{
    static const std::vector<std::string> all = {
        "omega_m_units", "omega_m", "delta2p", "delta3", "kappa",   "kappa3",           "J",       "Omega_m",
        "gamma",         "gamma_sc", "n_th",   "radius_nm", "density", "epsilon", "lambda_um", "cavity_length_cm",
        "waist_um"};
    return all;
}

bool Config::is_key(std::string_view key)
{
    for (const auto& k : keys()) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

void Config::set(const std::string& key, const std::string& value)
{
    if (!is_key(key)) {
        throw ValidationError("unknown config key '" + key + "'");
    }
    if (key == "omega_m_units") {
        if (value == "normalized") {
            units_ = RateUnits::normalized;
        } else if (value == "si") {
            units_ = RateUnits::si;
        } else {
            throw ValidationError("config key 'omega_m_units': expected 'normalized' or 'si', got '" + value + "'");
        }
    } else if (key == "J" && (value == "sqrt_kappa" || value == "input_output")) {
        j_rule_ = value == "sqrt_kappa" ? JRule::sqrt_kappa : JRule::input_output;
    } else if (key == "delta2p" && (value == "closed_form" || value == "effective_sideband")) {
        detuning_rule_ = value == "closed_form" ? DetuningRule::closed_form : DetuningRule::effective_sideband;
    } else {
        set_number(key, parse_number(key, value));
        return;
    }
    present_.insert(key);
}

void Config::set_number(const std::string& key, double v)
{
    if (!std::isfinite(v)) {
        throw ValidationError("config key '" + key + "': value must be finite");
    }
    if (key == "omega_m") omega_m_ = v;
    else if (key == "delta2p") { delta2p_ = v; detuning_rule_ = DetuningRule::fixed; }
    else if (key == "delta3") delta3_ = v;
    else if (key == "kappa") kappa_ = v;
    else if (key == "kappa3") kappa3_ = v;
    else if (key == "J") { J_ = v; j_rule_ = JRule::fixed; }
    else if (key == "Omega_m") Omega_m_ = v;
    else if (key == "gamma") gamma_ = v;
    else if (key == "gamma_sc") gamma_sc_ = v;
    else if (key == "n_th") n_th_ = v;
    else if (key == "radius_nm") radius_nm_ = v;
    else if (key == "density") density_ = v;
    else if (key == "epsilon") epsilon_ = v;
    else if (key == "lambda_um") lambda_um_ = v;
    else if (key == "cavity_length_cm") cavity_length_cm_ = v;
    else if (key == "waist_um") waist_um_ = v;
    else throw ValidationError("config key '" + key + "' does not take a number");
    present_.insert(key);
}

double Config::rate(double value) const
{
    if (units_ == RateUnits::normalized) {
        return value;
    }
    if (!omega_m_ || !(*omega_m_ > 0.0)) {
        throw ValidationError("config key 'omega_m' (rad/s, > 0) is required when omega_m_units = si");
    }
    return value / *omega_m_;
}

NormalizedParams Config::resolve() const
{
    if (has("gamma_sc") && has("radius_nm")) {
        throw ValidationError("config keys 'gamma_sc' and 'radius_nm' both set; give one");
    }
    NormalizedParams p;
    p.delta3 = rate(delta3_);
    p.kappa = rate(kappa_);
    p.kappa3 = rate(kappa3_);
    p.Omega_m = rate(Omega_m_);
    p.gamma = rate(gamma_);
    p.n_th = n_th_;
    p.gamma_sc = radius_nm_ ? levcool::gamma_sc(*radius_nm_ * 1e-9, epsilon_, lambda_um_ * 1e-6) : rate(gamma_sc_);
    p.delta2p = rate(delta2p_);
    p.J = rate(J_);
    p.validate();

    switch (j_rule_) {
    case JRule::sqrt_kappa: p.J = j_sqrt_kappa(p.kappa); break;
    case JRule::input_output: p.J = j_input_output(p.kappa, p.kappa3); break;
    case JRule::fixed: break;
    }
    switch (detuning_rule_) {
    case DetuningRule::closed_form:
        if (p.delta3 + 1.0 == 0.0) {
            throw ValidationError("delta2p = closed_form undefined for delta3 = -omega_m");
        }
        p.delta2p = p.J * p.J / (p.delta3 + 1.0);
        break;
    case DetuningRule::effective_sideband: p.delta2p = delta2p_for_effective_detuning(p, -1.0); break;
    case DetuningRule::fixed: break;
    }
    p.validate();
    return p;
}

PhysicalParams Config::physical() const
{
    PhysicalParams phys;
    phys.radius = radius_nm_.value_or(50.0) * 1e-9;
    phys.density = density_;
    phys.epsilon = epsilon_;
    phys.wavelength = lambda_um_ * 1e-6;
    phys.cavity_length = cavity_length_cm_ * 1e-2;
    phys.waist = waist_um_ * 1e-6;
    if (omega_m_) {
        phys.omega_m = *omega_m_;
    }
    return phys;
}

bool Config::has_geometry() const { return has("radius_nm") || has("cavity_length_cm") || has("waist_um"); }

Config parse_config(std::istream& in, const std::string& source)
{
    Config cfg;
    std::set<std::string> seen;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        const std::string where = source + ":" + std::to_string(number) + ": ";
        if (eq == std::string::npos) {
            throw ValidationError(where + "expected 'key = value', got '" + body + "'");
        }
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (!seen.insert(key).second) {
            throw ValidationError(where + "config key '" + key + "' repeated");
        }
        if (value.empty()) {
            throw ValidationError(where + "config key '" + key + "' has no value");
        }
        try {
            cfg.set(key, value);
        } catch (const ValidationError& e) {
            throw ValidationError(where + e.what());
        }
    }
    return cfg;
}

Config load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open config file '" + path.string() + "'");
    }
    return parse_config(in, path.string());
}

}  // namespace levcool
