// bath.cpp

#include "qpump/bath.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpump::bath {

void BathParams::validate() const {
    if (!(s >= 0.0) || !std::isfinite(s))
        throw std::invalid_argument("BathParams: coupling strength s must be non-negative");
    if (!(omega_c > 0.0) || !std::isfinite(omega_c))
        throw std::invalid_argument("BathParams: cutoff omega_c must be positive");
}

void BathPair::validate() const {
    left.validate();
    right.validate();
}

double bose_occupation(double beta_tilde) {
    if (!(beta_tilde > 0.0))
        throw std::domain_error("bose_occupation: beta_tilde must be positive");
    return 1.0 / std::expm1(beta_tilde);
}

double coupling_gamma(const BathParams& bath) {
    bath.validate();
    return 2.0 * std::numbers::pi * bath.s * std::exp(-1.0 / bath.omega_c);
}

double gibbs_ground_population(double beta_tilde) {
    if (!(beta_tilde > 0.0))
        throw std::domain_error("gibbs_ground_population: beta_tilde must be positive");
    return 1.0 / (1.0 + std::exp(-beta_tilde));
}

namespace {

BathRates rates_for(const BathParams& bath, double beta_tilde) {
    BathRates r;
    const double gamma = coupling_gamma(bath);
    r.N = bose_occupation(beta_tilde);
    r.k_u = gamma * (1.0 + r.N);
    r.k_d = gamma * r.N;
    r.A = -(r.k_d + r.k_u);
    r.B = -r.k_u;
    return r;
}

}

IntervalRates interval_rates_beta(const BathPair& baths, double beta_left, double beta_right) {
    baths.validate();
    IntervalRates rates;
    rates.left = rates_for(baths.left, beta_left);
    rates.right = rates_for(baths.right, beta_right);
    rates.K_u = rates.left.k_u + rates.right.k_u;
    rates.K_d = rates.left.k_d + rates.right.k_d;
    rates.Lambda = -(rates.K_d + rates.K_u);
    const double total = rates.K_u + rates.K_d;
    rates.rho_s = total > 0.0 ? rates.K_u / total : 0.5;
    return rates;
}

IntervalRates interval_rates(const BathPair& baths, double T_left_K, double T_right_K,
                             const units::UnitSystem& u) {
    return interval_rates_beta(baths, units::beta_tilde_from_kelvin(T_left_K, u),
                               units::beta_tilde_from_kelvin(T_right_K, u));
}

std::pair<double, double> markov_generator(const IntervalRates& rates, Side which) {
    const BathRates& r = rates.of(which);
    return {r.A, r.B};
}

}
