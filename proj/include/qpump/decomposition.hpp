// decomposition.hpp — exact split of the accumulated flux into dynamical, geometric,
// and non-adiabatic parts, plus the initial-memory profile phi0

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qpump/bath.hpp"
#include "qpump/protocol.hpp"
#include "qpump/units.hpp"

namespace qpump::decomposition {

// Guard scale for the relative identity residual when a total flux is near zero,
// in units of hbar*omega0.
inline constexpr double identity_guard = 1e-12;

struct FluxDecomposition {
    std::array<double, 2> G1{};  // indexed by bath::side_index
    std::array<double, 2> G2{};
    std::array<double, 2> G3{};
    std::array<std::vector<double>, 2> phi0{};
    std::array<std::vector<double>, 2> psi{};
    std::array<double, 2> direct_total{};       // accumulate_flux totals, hbar*omega0
    std::array<double, 2> identity_residual{};  // |direct - (G1+G2+G3)| / max(|direct|, guard)
    double j_hat_dyn_per_s{0};
    double j_hat_geo_per_s{0};
    double j_hat_nonad_per_s{0};
    double j_hat_per_s{0};  // from the direct accumulation
};

// G1_nu = sum_j (A_nu(j) rho_s(j) - B_nu(j)) dt
std::array<double, 2> dynamical_part(const protocol::DiscretizedSchedule& schedule,
                                     const bath::BathPair& baths, const units::UnitSystem& u);

// Same quantity through the bias product Gamma_L*Gamma_R*(N_L - N_R)/K per interval;
// an algebraically independent route kept for cross-checking.
std::array<double, 2> dynamical_part_bias_form(const protocol::DiscretizedSchedule& schedule,
                                               const bath::BathPair& baths,
                                               const units::UnitSystem& u);

// G2_nu = sum_{j<n} (A_nu(j+1)/Lambda(j+1)) (rho_s(j+1) - rho_s(j)); depends only on
// the temperature sequence, not on the interval duration.
std::array<double, 2> geometric_part(const protocol::DiscretizedSchedule& schedule,
                                     const bath::BathPair& baths, const units::UnitSystem& u);

struct NonadiabaticPart {
    std::array<double, 2> G3{};
    std::array<std::vector<double>, 2> phi0{};
    std::array<std::vector<double>, 2> psi{};
};

NonadiabaticPart nonadiabatic_part(const protocol::DiscretizedSchedule& schedule,
                                   const bath::BathPair& baths, const units::UnitSystem& u,
                                   double rho00_initial);

// phi0_hat(j) = phi0_R(j) - phi0_L(j)
std::vector<double> phi0_profile(const protocol::DiscretizedSchedule& schedule,
                                 const bath::BathPair& baths, const units::UnitSystem& u,
                                 double rho00_initial);

FluxDecomposition decompose_flux(const protocol::DiscretizedSchedule& schedule,
                                 const bath::BathPair& baths, const units::UnitSystem& u,
                                 double rho00_initial, std::size_t period_count = 1);

// CSV with header "bath,G1,G2,G3,direct_total,identity_residual" (rows L, R)
void write_decomposition_csv(std::ostream& out, const FluxDecomposition& decomposition);

// CSV with header "j,phi0_hat"
void write_profile_csv(std::ostream& out, const std::vector<double>& phi0_hat);

}
