// config.hpp — flat key = value experiment configuration shared by the CLI and tests

#pragma once

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpump/bath.hpp"
#include "qpump/correlation.hpp"
#include "qpump/protocol.hpp"
#include "qpump/units.hpp"

namespace qpump::config {

enum class ExperimentKind { FluxSweep, Decompose, Phi0Profile, LambdaTrace, Geometric };

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const { return errors_; }

private:
    std::vector<std::string> errors_;
};

// Every field has a usable default (the reference modulation setup); a config
// file only overrides what it names. Frequencies are in 1e12 rad/s.
struct ExperimentConfig {
    double hbar_omega0_meV{25.0};

    double s_L{0.01};
    double s_R{0.01};
    double omega_c_L{3.0};
    double omega_c_R{3.0};

    double T0_L_K{200.0};
    double dT_L_K{100.0};
    double phase_L_rad{std::numbers::pi / 4};
    double T0_R_K{200.0};
    double dT_R_K{100.0};
    double phase_R_rad{-std::numbers::pi / 4};

    double omega_THz{5.0};
    double omega_start_THz{0.05};
    double omega_stop_THz{5.0};
    std::size_t omega_count{41};

    std::size_t n{41};
    std::vector<double> beta_s{0.5};
    std::size_t period_count{1};
    protocol::SamplePoint sample_point{protocol::SamplePoint::Left};
    bool swap_baths{false};
    std::string schedule_csv{};  // when set, replaces the sinusoidal discretization

    double t_grid_start{0.05};
    double t_grid_stop{50.0};
    std::size_t t_grid_count{46};
    std::string lambda_settings{};  // "TL:TR,TL:TR,..."; empty selects the defaults

    units::UnitSystem unit_system() const;
    bath::BathPair baths() const;
    protocol::ModulationProtocol modulation(double omega_rad_per_s) const;

    // Logarithmically spaced, endpoints included
    std::vector<double> omega_grid_THz() const;
    std::vector<double> time_grid() const;

    // Parsed lambda_settings, or the default trio: (100, 200), (200, 300), and
    // the protocol's equal starting temperatures.
    std::vector<correlation::TemperatureSetting> settings() const;

    // Field-prefixed problem descriptions; empty means the config is usable for
    // the given experiment.
    std::vector<std::string> validate(ExperimentKind kind) const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

// Full listing in parse_config syntax; parse_config(to_text(c)) reproduces c.
std::string to_text(const ExperimentConfig& config);

}
