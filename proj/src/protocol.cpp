// protocol.cpp

#include "qpump/protocol.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qpump/csv.hpp"

namespace qpump::protocol {

namespace {

void validate_modulation(const BathModulation& m, const char* which) {
    if (!std::isfinite(m.T0_K) || !std::isfinite(m.dT_K) || !std::isfinite(m.phase_rad))
        throw std::invalid_argument(std::string("ModulationProtocol: non-finite ") + which +
                                    " modulation");
    if (!(m.T0_K - std::abs(m.dT_K) > 0.0))
        throw std::invalid_argument(std::string("ModulationProtocol: ") + which +
                                    " temperature must stay positive over the cycle");
}

}

void ModulationProtocol::validate() const {
    validate_modulation(left, "left");
    validate_modulation(right, "right");
    if (!(omega_rad_per_s > 0.0))
        throw std::invalid_argument("ModulationProtocol: frequency must be positive");
}

std::pair<double, double> ModulationProtocol::sample(double t_s) const {
    return sample_phase(omega_rad_per_s * t_s);
}

std::pair<double, double> ModulationProtocol::sample_rate(double t_s) const {
    const double theta = omega_rad_per_s * t_s;
    return {-left.dT_K * omega_rad_per_s * std::sin(theta + left.phase_rad),
            -right.dT_K * omega_rad_per_s * std::sin(theta + right.phase_rad)};
}

std::pair<double, double> ModulationProtocol::sample_phase(double theta) const {
    return {left.T0_K + left.dT_K * std::cos(theta + left.phase_rad),
            right.T0_K + right.dT_K * std::cos(theta + right.phase_rad)};
}

std::pair<double, double> ModulationProtocol::phase_derivative(double theta) const {
    return {-left.dT_K * std::sin(theta + left.phase_rad),
            -right.dT_K * std::sin(theta + right.phase_rad)};
}

ModulationProtocol ModulationProtocol::reversed() const {
    ModulationProtocol r = *this;
    r.left.phase_rad = -left.phase_rad;
    r.right.phase_rad = -right.phase_rad;
    return r;
}

void DiscretizedSchedule::validate() const {
    if (entries.empty())
        throw std::invalid_argument("DiscretizedSchedule: needs at least one entry");
    if (!(delta_t_s > 0.0) || !(period_s > 0.0))
        throw std::invalid_argument("DiscretizedSchedule: durations must be positive");
    const double n_delta = static_cast<double>(entries.size()) * delta_t_s;
    if (std::abs(n_delta - period_s) > 1e-9 * period_s)
        throw std::invalid_argument("DiscretizedSchedule: period must equal n * delta_t");
    for (const ScheduleEntry& e : entries)
        if (!(e.T_left_K > 0.0) || !(e.T_right_K > 0.0))
            throw std::invalid_argument("DiscretizedSchedule: temperatures must be positive");
}

DiscretizedSchedule discretize(const ModulationProtocol& p, std::size_t n, SamplePoint where) {
    p.validate();
    if (n == 0)
        throw std::invalid_argument("discretize: division number must be at least 1");
    DiscretizedSchedule schedule;
    schedule.period_s = p.period_s();
    schedule.delta_t_s = schedule.period_s / static_cast<double>(n);
    schedule.entries.reserve(n);
    const double offset = where == SamplePoint::Midpoint ? 0.5 : 0.0;
    // Sampling in the phase domain keeps the temperature sequence independent of
    // the frequency (bit for bit), so only delta_t carries the Omega dependence.
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto [tl, tr] = p.sample_phase((static_cast<double>(j) + offset) * step);
        schedule.entries.push_back({tl, tr});
    }
    return schedule;
}

DiscretizedSchedule swap_baths(const DiscretizedSchedule& schedule) {
    DiscretizedSchedule swapped = schedule;
    for (ScheduleEntry& e : swapped.entries) std::swap(e.T_left_K, e.T_right_K);
    return swapped;
}

DiscretizedSchedule tile(const DiscretizedSchedule& schedule, std::size_t count) {
    if (count == 0)
        throw std::invalid_argument("tile: repetition count must be at least 1");
    DiscretizedSchedule tiled;
    tiled.delta_t_s = schedule.delta_t_s;
    tiled.period_s = schedule.period_s * static_cast<double>(count);
    tiled.entries.reserve(schedule.entries.size() * count);
    for (std::size_t rep = 0; rep < count; ++rep)
        tiled.entries.insert(tiled.entries.end(), schedule.entries.begin(),
                             schedule.entries.end());
    return tiled;
}

void write_schedule_csv(std::ostream& out, const DiscretizedSchedule& schedule) {
    out << "j,T_L_K,T_R_K\n";
    for (std::size_t j = 0; j < schedule.entries.size(); ++j)
        out << (j + 1) << ',' << csv::format_double(schedule.entries[j].T_left_K) << ','
            << csv::format_double(schedule.entries[j].T_right_K) << '\n';
}

DiscretizedSchedule read_schedule_csv(std::istream& in, double period_s) {
    std::string line;
    if (!std::getline(in, line) || csv::strip_eol(line) != "j,T_L_K,T_R_K")
        throw std::invalid_argument("read_schedule_csv: expected header j,T_L_K,T_R_K");
    DiscretizedSchedule schedule;
    std::size_t expected = 1;
    while (std::getline(in, line)) {
        if (csv::strip_eol(line).empty()) continue;
        const auto fields = csv::split_line(csv::strip_eol(line));
        if (fields.size() != 3)
            throw std::invalid_argument("read_schedule_csv: row " + std::to_string(expected) +
                                        " must have 3 fields");
        if (csv::parse_index(fields[0]) != expected)
            throw std::invalid_argument("read_schedule_csv: rows must be numbered 1..n in order");
        schedule.entries.push_back({csv::parse_double(fields[1]), csv::parse_double(fields[2])});
        ++expected;
    }
    if (schedule.entries.empty())
        throw std::invalid_argument("read_schedule_csv: no schedule rows found");
    schedule.period_s = period_s;
    schedule.delta_t_s = period_s / static_cast<double>(schedule.entries.size());
    schedule.validate();
    return schedule;
}

}
