// config.cpp

#include "qpump/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <utility>

#include "qpump/csv.hpp"

namespace qpump::config {

namespace {

std::string trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && (s[begin] == ' ' || s[begin] == '\t')) ++begin;
    while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) --end;
    return std::string(s.substr(begin, end - begin));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string joined;
    for (const auto& part : parts) {
        if (!joined.empty()) joined += sep;
        joined += part;
    }
    return joined;
}

std::vector<double> parse_double_list(const std::string& value) {
    std::vector<double> values;
    for (const auto& field : csv::split_line(value)) values.push_back(csv::parse_double(field));
    if (values.empty()) throw std::invalid_argument("empty list");
    return values;
}

std::vector<std::pair<double, double>> parse_lambda_settings(const std::string& value) {
    std::vector<std::pair<double, double>> pairs;
    for (const auto& entry : csv::split_line(value)) {
        const auto colon = entry.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("expected TL:TR pairs separated by commas");
        pairs.push_back({csv::parse_double(entry.substr(0, colon)),
                         csv::parse_double(entry.substr(colon + 1))});
    }
    return pairs;
}

const char* sample_point_name(protocol::SamplePoint p) {
    return p == protocol::SamplePoint::Midpoint ? "mid" : "left";
}

}

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error("config: " + join(errors, "; ")), errors_(std::move(errors)) {}

units::UnitSystem ExperimentConfig::unit_system() const {
    return units::UnitSystem(hbar_omega0_meV);
}

bath::BathPair ExperimentConfig::baths() const {
    return {{bath::Side::Left, s_L, omega_c_L}, {bath::Side::Right, s_R, omega_c_R}};
}

protocol::ModulationProtocol ExperimentConfig::modulation(double omega_rad_per_s) const {
    protocol::ModulationProtocol p;
    p.left = {T0_L_K, dT_L_K, phase_L_rad};
    p.right = {T0_R_K, dT_R_K, phase_R_rad};
    p.omega_rad_per_s = omega_rad_per_s;
    return p;
}

namespace {

std::vector<double> log_grid(double start, double stop, std::size_t count) {
    std::vector<double> grid;
    grid.reserve(count);
    if (count == 1) {
        grid.push_back(start);
        return grid;
    }
    const double ratio = std::log(stop / start) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k + 1 < count; ++k)
        grid.push_back(start * std::exp(static_cast<double>(k) * ratio));
    grid.push_back(stop);
    return grid;
}

}

std::vector<double> ExperimentConfig::omega_grid_THz() const {
    return log_grid(omega_start_THz, omega_stop_THz, omega_count);
}

std::vector<double> ExperimentConfig::time_grid() const {
    return log_grid(t_grid_start, t_grid_stop, t_grid_count);
}

std::vector<correlation::TemperatureSetting> ExperimentConfig::settings() const {
    std::vector<correlation::TemperatureSetting> result;
    if (lambda_settings.empty()) {
        const auto [tl0, tr0] = modulation(1e12).sample_phase(0.0);
        result.push_back(correlation::make_setting(100.0, 200.0));
        result.push_back(correlation::make_setting(200.0, 300.0));
        result.push_back(correlation::make_setting(tl0, tr0));
        return result;
    }
    for (const auto& [tl, tr] : parse_lambda_settings(lambda_settings))
        result.push_back(correlation::make_setting(tl, tr));
    return result;
}

std::vector<std::string> ExperimentConfig::validate(ExperimentKind kind) const {
    std::vector<std::string> errors;
    const auto require = [&](bool ok, const char* message) {
        if (!ok) errors.emplace_back(message);
    };

    require(hbar_omega0_meV > 0.0, "hbar_omega0_meV: must be positive");
    require(s_L >= 0.0, "s_L: must be non-negative");
    require(s_R >= 0.0, "s_R: must be non-negative");
    require(omega_c_L > 0.0, "omega_c_L: must be positive");
    require(omega_c_R > 0.0, "omega_c_R: must be positive");
    require(n >= 1, "n: must be at least 1");
    require(period_count >= 1, "period_count: must be at least 1");

    const bool needs_protocol = schedule_csv.empty() || kind == ExperimentKind::Geometric ||
                                (kind == ExperimentKind::LambdaTrace && lambda_settings.empty());
    if (needs_protocol) {
        require(T0_L_K - std::abs(dT_L_K) > 0.0,
                "T0_L_K/dT_L_K: left temperature must stay positive over the cycle");
        require(T0_R_K - std::abs(dT_R_K) > 0.0,
                "T0_R_K/dT_R_K: right temperature must stay positive over the cycle");
    }

    const auto require_single_beta = [&] {
        if (beta_s.size() != 1)
            errors.emplace_back("beta_s: exactly one value expected for this experiment");
        for (double b : beta_s)
            if (!(b > 0.0)) errors.emplace_back("beta_s: entries must be positive");
    };

    switch (kind) {
        case ExperimentKind::FluxSweep:
            require(omega_start_THz > 0.0, "omega_start_THz: must be positive");
            require(omega_stop_THz >= omega_start_THz,
                    "omega_stop_THz: must be at least omega_start_THz");
            require(omega_count >= 1, "omega_count: must be at least 1");
            require(!beta_s.empty(), "beta_s: at least one value required");
            for (double b : beta_s)
                if (!(b > 0.0)) {
                    errors.emplace_back("beta_s: entries must be positive");
                    break;
                }
            break;
        case ExperimentKind::Decompose:
        case ExperimentKind::Phi0Profile:
            require(omega_THz > 0.0, "omega_THz: must be positive");
            require_single_beta();
            break;
        case ExperimentKind::LambdaTrace:
            require(t_grid_start > 0.0, "t_grid_start: must be positive");
            require(t_grid_stop > t_grid_start, "t_grid_stop: must exceed t_grid_start");
            require(t_grid_count >= 2, "t_grid_count: must be at least 2");
            if (!lambda_settings.empty()) {
                try {
                    for (const auto& [tl, tr] : parse_lambda_settings(lambda_settings))
                        if (!(tl > 0.0) || !(tr > 0.0))
                            errors.emplace_back("lambda_settings: temperatures must be positive");
                } catch (const std::exception& e) {
                    errors.emplace_back(std::string("lambda_settings: ") + e.what());
                }
            }
            break;
        case ExperimentKind::Geometric:
            require(omega_THz > 0.0, "omega_THz: must be positive");
            break;
    }
    return errors;
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig config;
    std::vector<std::string> errors;
    std::map<std::string, bool> seen;

    using Setter = std::function<void(const std::string&)>;
    const auto number = [](double& slot) {
        return [&slot](const std::string& v) { slot = csv::parse_double(v); };
    };
    const auto count = [](std::size_t& slot) {
        return [&slot](const std::string& v) { slot = csv::parse_index(v); };
    };
    const auto text = [](std::string& slot) {
        return [&slot](const std::string& v) { slot = v; };
    };

    const std::map<std::string, Setter> setters = {
        {"hbar_omega0_meV", number(config.hbar_omega0_meV)},
        {"s_L", number(config.s_L)},
        {"s_R", number(config.s_R)},
        {"omega_c_L", number(config.omega_c_L)},
        {"omega_c_R", number(config.omega_c_R)},
        {"T0_L_K", number(config.T0_L_K)},
        {"dT_L_K", number(config.dT_L_K)},
        {"phase_L_rad", number(config.phase_L_rad)},
        {"T0_R_K", number(config.T0_R_K)},
        {"dT_R_K", number(config.dT_R_K)},
        {"phase_R_rad", number(config.phase_R_rad)},
        {"omega_THz", number(config.omega_THz)},
        {"omega_start_THz", number(config.omega_start_THz)},
        {"omega_stop_THz", number(config.omega_stop_THz)},
        {"omega_count", count(config.omega_count)},
        {"n", count(config.n)},
        {"beta_s",
         [&config](const std::string& v) { config.beta_s = parse_double_list(v); }},
        {"period_count", count(config.period_count)},
        {"sample_point",
         [&config](const std::string& v) {
             if (v == "left")
                 config.sample_point = protocol::SamplePoint::Left;
             else if (v == "mid")
                 config.sample_point = protocol::SamplePoint::Midpoint;
             else
                 throw std::invalid_argument("expected 'left' or 'mid'");
         }},
        {"swap_baths",
         [&config](const std::string& v) {
             if (v == "true")
                 config.swap_baths = true;
             else if (v == "false")
                 config.swap_baths = false;
             else
                 throw std::invalid_argument("expected 'true' or 'false'");
         }},
        {"schedule_csv", text(config.schedule_csv)},
        {"t_grid_start", number(config.t_grid_start)},
        {"t_grid_stop", number(config.t_grid_stop)},
        {"t_grid_count", count(config.t_grid_count)},
        {"lambda_settings", text(config.lambda_settings)},
    };

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const auto eq = stripped.find('=');
        const auto context = "line " + std::to_string(line_number);
        if (eq == std::string::npos) {
            errors.push_back(context + ": expected key = value");
            continue;
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) {
            errors.push_back(context + ": unknown key '" + key + "'");
            continue;
        }
        if (seen[key]) {
            errors.push_back(context + ": duplicate key '" + key + "'");
            continue;
        }
        seen[key] = true;
        try {
            it->second(value);
        } catch (const std::exception& e) {
            errors.push_back(context + ": " + key + ": " + e.what());
        }
    }

    if (!errors.empty()) throw ConfigError(std::move(errors));
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file '" + path + "'"});
    return parse_config(in);
}

std::string to_text(const ExperimentConfig& c) {
    std::ostringstream out;
    const auto put = [&out](const char* key, const std::string& value) {
        out << key << " = " << value << '\n';
    };
    put("hbar_omega0_meV", csv::format_double(c.hbar_omega0_meV));
    put("s_L", csv::format_double(c.s_L));
    put("s_R", csv::format_double(c.s_R));
    put("omega_c_L", csv::format_double(c.omega_c_L));
    put("omega_c_R", csv::format_double(c.omega_c_R));
    put("T0_L_K", csv::format_double(c.T0_L_K));
    put("dT_L_K", csv::format_double(c.dT_L_K));
    put("phase_L_rad", csv::format_double(c.phase_L_rad));
    put("T0_R_K", csv::format_double(c.T0_R_K));
    put("dT_R_K", csv::format_double(c.dT_R_K));
    put("phase_R_rad", csv::format_double(c.phase_R_rad));
    put("omega_THz", csv::format_double(c.omega_THz));
    put("omega_start_THz", csv::format_double(c.omega_start_THz));
    put("omega_stop_THz", csv::format_double(c.omega_stop_THz));
    put("omega_count", std::to_string(c.omega_count));
    put("n", std::to_string(c.n));
    std::string betas;
    for (double b : c.beta_s) {
        if (!betas.empty()) betas += ',';
        betas += csv::format_double(b);
    }
    put("beta_s", betas);
    put("period_count", std::to_string(c.period_count));
    put("sample_point", sample_point_name(c.sample_point));
    put("swap_baths", c.swap_baths ? "true" : "false");
    put("schedule_csv", c.schedule_csv);
    put("t_grid_start", csv::format_double(c.t_grid_start));
    put("t_grid_stop", csv::format_double(c.t_grid_stop));
    put("t_grid_count", std::to_string(c.t_grid_count));
    put("lambda_settings", c.lambda_settings);
    return out.str();
}

}
