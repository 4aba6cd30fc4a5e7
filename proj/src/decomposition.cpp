// decomposition.cpp

#include "qpump/decomposition.hpp"

#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "qpump/csv.hpp"
#include "qpump/dynamics.hpp"

namespace qpump::decomposition {

namespace {

// A_nu/Lambda for one interval; zero when the generator vanishes (the matching
// exponential factor is then exactly one and the interval carries no flux).
double rate_ratio(const bath::IntervalRates& r, bath::Side side) {
    if (r.Lambda == 0.0) return 0.0;
    return r.of(side).A / r.Lambda;
}

}

std::array<double, 2> dynamical_part(const protocol::DiscretizedSchedule& schedule,
                                     const bath::BathPair& baths, const units::UnitSystem& u) {
    const auto rates = dynamics::schedule_rates(schedule, baths, u);
    const double dt = units::scaled_time(schedule.delta_t_s, u);
    std::array<double, 2> g1{};
    for (const auto& r : rates) {
        for (auto side : {bath::Side::Left, bath::Side::Right}) {
            const auto& b = r.of(side);
            g1[bath::side_index(side)] += (b.A * r.rho_s - b.B) * dt;
        }
    }
    return g1;
}

std::array<double, 2> dynamical_part_bias_form(const protocol::DiscretizedSchedule& schedule,
                                               const bath::BathPair& baths,
                                               const units::UnitSystem& u) {
    const auto rates = dynamics::schedule_rates(schedule, baths, u);
    const double dt = units::scaled_time(schedule.delta_t_s, u);
    std::array<double, 2> g1{};
    for (const auto& r : rates) {
        const double total = r.K_u + r.K_d;
        if (total == 0.0) continue;
        // k_u - k_d recovers Gamma exactly.
        const double gamma_left = r.left.k_u - r.left.k_d;
        const double gamma_right = r.right.k_u - r.right.k_d;
        const double bias = gamma_left * gamma_right * (r.left.N - r.right.N) / total * dt;
        g1[bath::side_index(bath::Side::Right)] += bias;
        g1[bath::side_index(bath::Side::Left)] -= bias;
    }
    return g1;
}

std::array<double, 2> geometric_part(const protocol::DiscretizedSchedule& schedule,
                                     const bath::BathPair& baths, const units::UnitSystem& u) {
    const auto rates = dynamics::schedule_rates(schedule, baths, u);
    std::array<double, 2> g2{};
    for (std::size_t i = 0; i + 1 < rates.size(); ++i) {
        const double jump = rates[i + 1].rho_s - rates[i].rho_s;
        for (auto side : {bath::Side::Left, bath::Side::Right}) {
            g2[bath::side_index(side)] += rate_ratio(rates[i + 1], side) * jump;
        }
    }
    return g2;
}

NonadiabaticPart nonadiabatic_part(const protocol::DiscretizedSchedule& schedule,
                                   const bath::BathPair& baths, const units::UnitSystem& u,
                                   double rho00_initial) {
    if (!(rho00_initial >= 0.0 && rho00_initial <= 1.0))
        throw std::domain_error("nonadiabatic_part: rho00_initial outside [0, 1]");

    const auto rates = dynamics::schedule_rates(schedule, baths, u);
    const double dt = units::scaled_time(schedule.delta_t_s, u);
    const std::size_t n = rates.size();

    // Per-interval decay factor E and flux weight c = (A/Lambda)(E - 1) per bath.
    std::vector<double> decay(n);
    std::array<std::vector<double>, 2> weight;
    weight[0].resize(n);
    weight[1].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        decay[i] = std::exp(rates[i].Lambda * dt);
        for (auto side : {bath::Side::Left, bath::Side::Right}) {
            weight[bath::side_index(side)][i] = rate_ratio(rates[i], side) * (decay[i] - 1.0);
        }
    }

    NonadiabaticPart part;

    // phi0(i) = (rho00(0) - rho_s(1)) c(i) exp(sum_{k<i} Lambda(k) dt); the exponent
    // is a running sum of non-positive terms, accumulated as a sum rather than a
    // product of exponentials so long schedules cannot underflow term by term.
    const double delta0 = rho00_initial - rates[0].rho_s;
    for (std::size_t k = 0; k < 2; ++k) part.phi0[k].resize(n);
    double exponent = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double survival = std::exp(exponent);
        for (std::size_t k = 0; k < 2; ++k) part.phi0[k][i] = delta0 * weight[k][i] * survival;
        exponent += rates[i].Lambda * dt;
    }

    // psi(i) = (A(i)/Lambda(i)) E(i) + S(i), where S(i) collects the downstream
    // weights: S(n-1) = 0, S(i) = E(i) (c(i+1) + S(i+1)). Every factor in the
    // recursion has magnitude at most one, so it is stable for any n.
    for (auto side : {bath::Side::Left, bath::Side::Right}) {
        const auto k = bath::side_index(side);
        part.psi[k].resize(n);
        std::vector<double> suffix(n, 0.0);
        for (std::size_t i = n - 1; i-- > 0;) {
            suffix[i] = decay[i] * (weight[k][i + 1] + suffix[i + 1]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            part.psi[k][i] = rate_ratio(rates[i], side) * decay[i] + suffix[i];
        }
    }

    // G3 = sum_i phi0(i) + interior steady-state jumps weighted by psi + the
    // final-interval boundary term.
    for (std::size_t k = 0; k < 2; ++k) {
        const auto side = k == 0 ? bath::Side::Left : bath::Side::Right;
        double g3 = 0.0;
        for (double v : part.phi0[k]) g3 += v;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            g3 += (rates[i - 1].rho_s - rates[i].rho_s) * part.psi[k][i];
        }
        if (n >= 2) {
            g3 += (rates[n - 2].rho_s - rates[n - 1].rho_s) * rate_ratio(rates[n - 1], side) *
                  decay[n - 1];
        }
        part.G3[k] = g3;
    }

    return part;
}

std::vector<double> phi0_profile(const protocol::DiscretizedSchedule& schedule,
                                 const bath::BathPair& baths, const units::UnitSystem& u,
                                 double rho00_initial) {
    const auto part = nonadiabatic_part(schedule, baths, u, rho00_initial);
    const auto& left = part.phi0[bath::side_index(bath::Side::Left)];
    const auto& right = part.phi0[bath::side_index(bath::Side::Right)];
    std::vector<double> profile(left.size());
    for (std::size_t i = 0; i < profile.size(); ++i) profile[i] = right[i] - left[i];
    return profile;
}

FluxDecomposition decompose_flux(const protocol::DiscretizedSchedule& schedule,
                                 const bath::BathPair& baths, const units::UnitSystem& u,
                                 double rho00_initial, std::size_t period_count) {
    if (period_count == 0) throw std::invalid_argument("decompose_flux: period_count is zero");

    const auto tiled = period_count == 1 ? schedule : protocol::tile(schedule, period_count);

    FluxDecomposition d;
    d.G1 = dynamical_part(tiled, baths, u);
    d.G2 = geometric_part(tiled, baths, u);
    auto nonad = nonadiabatic_part(tiled, baths, u, rho00_initial);
    d.G3 = nonad.G3;
    d.phi0 = std::move(nonad.phi0);
    d.psi = std::move(nonad.psi);

    const auto record = dynamics::accumulate_flux(schedule, baths, u, rho00_initial, period_count);
    d.direct_total = {record.J_left, record.J_right};
    d.j_hat_per_s = record.j_hat_per_s;

    for (std::size_t k = 0; k < 2; ++k) {
        const double reconstructed = d.G1[k] + d.G2[k] + d.G3[k];
        const double scale = std::max(std::abs(d.direct_total[k]), identity_guard);
        d.identity_residual[k] = std::abs(d.direct_total[k] - reconstructed) / scale;
    }

    const auto l = bath::side_index(bath::Side::Left);
    const auto r = bath::side_index(bath::Side::Right);
    const double elapsed_s = schedule.period_s * static_cast<double>(period_count);
    d.j_hat_dyn_per_s = (d.G1[r] - d.G1[l]) / elapsed_s;
    d.j_hat_geo_per_s = (d.G2[r] - d.G2[l]) / elapsed_s;
    d.j_hat_nonad_per_s = (d.G3[r] - d.G3[l]) / elapsed_s;

    return d;
}

void write_decomposition_csv(std::ostream& out, const FluxDecomposition& d) {
    out << "bath,G1,G2,G3,direct_total,identity_residual\n";
    const char* names[2] = {"L", "R"};
    for (std::size_t k = 0; k < 2; ++k) {
        out << names[k] << ',' << csv::format_double(d.G1[k]) << ','
            << csv::format_double(d.G2[k]) << ',' << csv::format_double(d.G3[k]) << ','
            << csv::format_double(d.direct_total[k]) << ','
            << csv::format_double(d.identity_residual[k]) << '\n';
    }
}

void write_profile_csv(std::ostream& out, const std::vector<double>& phi0_hat) {
    out << "j,phi0_hat\n";
    for (std::size_t i = 0; i < phi0_hat.size(); ++i) {
        out << (i + 1) << ',' << csv::format_double(phi0_hat[i]) << '\n';
    }
}

}
