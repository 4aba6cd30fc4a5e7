// units.hpp — Laboratory units vs the dimensionless internal scale (hbar = k_B = omega0 = 1)

#pragma once

#include <cstddef>

namespace qpump::units {

// Pinned constants (meV-based) so every derived number is bit-stable across builds.
inline constexpr double k_boltzmann_meV_per_K = 8.617333e-2;
inline constexpr double hbar_meV_s = 6.582120e-13;

// The internal scale is set by the junction splitting hbar*omega0: energies are
// measured in hbar*omega0, rates in omega0, times in 1/omega0.
struct UnitSystem {
    double hbar_omega0_meV{25.0};

    UnitSystem() = default;
    explicit UnitSystem(double level_splitting_meV);

    double omega0_rad_per_s() const { return hbar_omega0_meV / hbar_meV_s; }
    double hbar_omega0_over_kB_K() const { return hbar_omega0_meV / k_boltzmann_meV_per_K; }
    double time_unit_ps() const { return 1e12 / omega0_rad_per_s(); }
};

// beta_tilde = hbar*omega0 / (k_B T)
double beta_tilde_from_kelvin(double temperature_K, const UnitSystem& u);
double kelvin_from_beta_tilde(double beta_tilde, const UnitSystem& u);

// delta_t = (2*pi/Omega)/n for one modulation cycle split into n equal holds
double interval_duration_s(double omega_rad_per_s, std::size_t n);

double scaled_time(double t_s, const UnitSystem& u);
double seconds_from_scaled(double t_scaled, const UnitSystem& u);

}
