// protocol.hpp — Sinusoidal temperature modulation and piecewise-constant schedules

#pragma once

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <utility>
#include <vector>

namespace qpump::protocol {

struct BathModulation {
    double T0_K{200.0};
    double dT_K{100.0};
    double phase_rad{0.0};
};

// T_nu(t) = T0 + dT * cos(Omega*t + phase); both baths share the frequency.
struct ModulationProtocol {
    BathModulation left{200.0, 100.0, std::numbers::pi / 4};
    BathModulation right{200.0, 100.0, -std::numbers::pi / 4};
    double omega_rad_per_s{5e12};

    void validate() const;
    double period_s() const { return 2.0 * std::numbers::pi / omega_rad_per_s; }

    std::pair<double, double> sample(double t_s) const;       // (T_L, T_R) in K
    std::pair<double, double> sample_rate(double t_s) const;  // dT/dt in K/s

    // Phase-domain views (theta = Omega*t), used by the continuous-driving module
    std::pair<double, double> sample_phase(double theta) const;
    std::pair<double, double> phase_derivative(double theta) const;  // dT/dtheta in K

    // Same orbit traversed backwards in time
    ModulationProtocol reversed() const;
};

struct ScheduleEntry {
    double T_left_K{0};
    double T_right_K{0};
};

// n equal holds covering one period; entry j holds for t in [(j-1)*delta_t, j*delta_t).
struct DiscretizedSchedule {
    double delta_t_s{0};
    double period_s{0};
    std::vector<ScheduleEntry> entries;

    std::size_t n() const { return entries.size(); }
    void validate() const;
};

enum class SamplePoint { Left, Midpoint };

DiscretizedSchedule discretize(const ModulationProtocol& p, std::size_t n,
                               SamplePoint where = SamplePoint::Left);

DiscretizedSchedule swap_baths(const DiscretizedSchedule& schedule);

// The same sequence of holds repeated `count` times (period scales accordingly)
DiscretizedSchedule tile(const DiscretizedSchedule& schedule, std::size_t count);

// CSV with header "j,T_L_K,T_R_K"; import needs the cycle period since the file
// carries only the temperature sequence.
void write_schedule_csv(std::ostream& out, const DiscretizedSchedule& schedule);
DiscretizedSchedule read_schedule_csv(std::istream& in, double period_s);

}
