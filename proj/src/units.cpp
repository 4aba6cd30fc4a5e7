// units.cpp

#include "qpump/units.hpp"

#include <numbers>
#include <stdexcept>

namespace qpump::units {

UnitSystem::UnitSystem(double level_splitting_meV) : hbar_omega0_meV(level_splitting_meV) {
    if (!(hbar_omega0_meV > 0.0))
        throw std::invalid_argument("UnitSystem: level splitting must be positive");
}

double beta_tilde_from_kelvin(double temperature_K, const UnitSystem& u) {
    if (!(temperature_K > 0.0))
        throw std::domain_error("beta_tilde_from_kelvin: temperature must be positive");
    return u.hbar_omega0_over_kB_K() / temperature_K;
}

double kelvin_from_beta_tilde(double beta_tilde, const UnitSystem& u) {
    if (!(beta_tilde > 0.0))
        throw std::domain_error("kelvin_from_beta_tilde: beta_tilde must be positive");
    return u.hbar_omega0_over_kB_K() / beta_tilde;
}

double interval_duration_s(double omega_rad_per_s, std::size_t n) {
    if (!(omega_rad_per_s > 0.0))
        throw std::domain_error("interval_duration_s: modulation frequency must be positive");
    if (n == 0)
        throw std::domain_error("interval_duration_s: division number must be at least 1");
    return 2.0 * std::numbers::pi / (omega_rad_per_s * static_cast<double>(n));
}

double scaled_time(double t_s, const UnitSystem& u) {
    return t_s * u.omega0_rad_per_s();
}

double seconds_from_scaled(double t_scaled, const UnitSystem& u) {
    return t_scaled / u.omega0_rad_per_s();
}

}
