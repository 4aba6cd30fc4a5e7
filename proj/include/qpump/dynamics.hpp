// dynamics.hpp — piecewise-Markovian population propagation and per-interval heat

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qpump/bath.hpp"
#include "qpump/protocol.hpp"
#include "qpump/units.hpp"

namespace qpump::dynamics {

// (exp(x) - 1)/x with the x -> 0 limit; expm1-backed so small |x| keeps full precision
double expm1_over(double x);

// Rate constants for every interval of a schedule, in schedule order
std::vector<bath::IntervalRates> schedule_rates(const protocol::DiscretizedSchedule& schedule,
                                                const bath::BathPair& baths,
                                                const units::UnitSystem& u);

struct PopulationTrajectory {
    std::vector<double> rho00;   // ground population at interval boundaries, size n+1
    std::vector<double> rho_s;   // per-interval steady population
    std::vector<double> lambda;  // per-interval decay rate, units of omega0
};

// Closed-form hop across each hold: rho00(t_j) = rho_s + exp(Lambda*dt)*(rho00(t_{j-1}) - rho_s)
PopulationTrajectory propagate_population(const protocol::DiscretizedSchedule& schedule,
                                          const bath::BathPair& baths, const units::UnitSystem& u,
                                          double rho00_initial, std::size_t period_count = 1);

// Heat released into {left, right} over one hold, in units of hbar*omega0
std::array<double, 2> interval_heat(const bath::IntervalRates& rates, double rho00_start,
                                    double delta_t_scaled);

struct HeatRecord {
    std::vector<std::array<double, 2>> q;  // per interval {left, right}, units of hbar*omega0
    double J_left{0};
    double J_right{0};
    double j_hat_per_s{0};  // (J_right - J_left)/elapsed, quanta per second
};

HeatRecord accumulate_flux(const protocol::DiscretizedSchedule& schedule,
                           const bath::BathPair& baths, const units::UnitSystem& u,
                           double rho00_initial, std::size_t period_count = 1);

// CSV with header "j,t_ps,rho00,rho_s_j,Lambda_j_per_ps"; the j = 0 row carries the
// initial population together with the first interval's rates.
void write_trajectory_csv(std::ostream& out, const PopulationTrajectory& trajectory,
                          const protocol::DiscretizedSchedule& schedule,
                          const units::UnitSystem& u);

}
