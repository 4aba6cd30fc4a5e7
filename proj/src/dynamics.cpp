// dynamics.cpp

#include "qpump/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qpump/csv.hpp"

namespace qpump::dynamics {

double expm1_over(double x) {
    if (x == 0.0) return 1.0;
    return std::expm1(x) / x;
}

std::vector<bath::IntervalRates> schedule_rates(const protocol::DiscretizedSchedule& schedule,
                                                const bath::BathPair& baths,
                                                const units::UnitSystem& u) {
    schedule.validate();
    std::vector<bath::IntervalRates> rates;
    rates.reserve(schedule.n());
    for (const protocol::ScheduleEntry& e : schedule.entries)
        rates.push_back(bath::interval_rates(baths, e.T_left_K, e.T_right_K, u));
    return rates;
}

PopulationTrajectory propagate_population(const protocol::DiscretizedSchedule& schedule,
                                          const bath::BathPair& baths, const units::UnitSystem& u,
                                          double rho00_initial, std::size_t period_count) {
    if (!(rho00_initial >= 0.0 && rho00_initial <= 1.0))
        throw std::domain_error("propagate_population: initial population must lie in [0, 1]");
    if (period_count == 0)
        throw std::invalid_argument("propagate_population: period_count must be at least 1");

    const std::vector<bath::IntervalRates> rates = schedule_rates(schedule, baths, u);
    const double dt = units::scaled_time(schedule.delta_t_s, u);
    const std::size_t total = schedule.n() * period_count;

    PopulationTrajectory trajectory;
    trajectory.rho00.reserve(total + 1);
    trajectory.rho_s.reserve(total);
    trajectory.lambda.reserve(total);
    trajectory.rho00.push_back(rho00_initial);

    double rho = rho00_initial;
    for (std::size_t step = 0; step < total; ++step) {
        const bath::IntervalRates& r = rates[step % schedule.n()];
        rho = r.rho_s + std::exp(r.Lambda * dt) * (rho - r.rho_s);
        trajectory.rho00.push_back(rho);
        trajectory.rho_s.push_back(r.rho_s);
        trajectory.lambda.push_back(r.Lambda);
    }
    return trajectory;
}

std::array<double, 2> interval_heat(const bath::IntervalRates& rates, double rho00_start,
                                    double delta_t_scaled) {
    if (!(delta_t_scaled > 0.0))
        throw std::domain_error("interval_heat: interval duration must be positive");
    if (rates.Lambda == 0.0) return {0.0, 0.0};
    // integral of rho00 over the hold, from the closed-form solution
    const double x = rates.Lambda * delta_t_scaled;
    const double pop_integral = rates.rho_s * delta_t_scaled +
                                (rho00_start - rates.rho_s) * delta_t_scaled * expm1_over(x);
    return {rates.left.A * pop_integral - rates.left.B * delta_t_scaled,
            rates.right.A * pop_integral - rates.right.B * delta_t_scaled};
}

HeatRecord accumulate_flux(const protocol::DiscretizedSchedule& schedule,
                           const bath::BathPair& baths, const units::UnitSystem& u,
                           double rho00_initial, std::size_t period_count) {
    const std::vector<bath::IntervalRates> rates = schedule_rates(schedule, baths, u);
    const PopulationTrajectory trajectory =
        propagate_population(schedule, baths, u, rho00_initial, period_count);
    const double dt = units::scaled_time(schedule.delta_t_s, u);
    const std::size_t total = schedule.n() * period_count;

    HeatRecord record;
    record.q.reserve(total);
    for (std::size_t step = 0; step < total; ++step) {
        const auto q = interval_heat(rates[step % schedule.n()], trajectory.rho00[step], dt);
        record.q.push_back(q);
        record.J_left += q[0];
        record.J_right += q[1];
    }
    const double elapsed_s = schedule.period_s * static_cast<double>(period_count);
    record.j_hat_per_s = (record.J_right - record.J_left) / elapsed_s;
    return record;
}

void write_trajectory_csv(std::ostream& out, const PopulationTrajectory& trajectory,
                          const protocol::DiscretizedSchedule& schedule,
                          const units::UnitSystem& u) {
    const std::size_t total = trajectory.rho_s.size();
    if (trajectory.rho00.size() != total + 1)
        throw std::invalid_argument("write_trajectory_csv: inconsistent trajectory");
    const double rate_per_ps = u.omega0_rad_per_s() * 1e-12;
    out << "j,t_ps,rho00,rho_s_j,Lambda_j_per_ps\n";
    for (std::size_t j = 0; j <= total; ++j) {
        const std::size_t interval = j == 0 ? 0 : j - 1;
        out << j << ',' << csv::format_double(static_cast<double>(j) * schedule.delta_t_s * 1e12)
            << ',' << csv::format_double(trajectory.rho00[j]) << ','
            << csv::format_double(trajectory.rho_s[interval]) << ','
            << csv::format_double(trajectory.lambda[interval] * rate_per_ps) << '\n';
    }
}

}
