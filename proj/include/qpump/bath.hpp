// bath.hpp — Ohmic bath parameters, Bose occupations, and per-interval rate constants

#pragma once

#include <utility>

#include "qpump/units.hpp"

namespace qpump::bath {

enum class Side { Left = 0, Right = 1 };

inline constexpr std::size_t side_index(Side s) { return s == Side::Left ? 0 : 1; }

// Ohmic spectral density h(w) = s * w * exp(-w/omega_c), with w and omega_c in
// units of omega0.
struct BathParams {
    Side label{Side::Left};
    double s{0.01};
    double omega_c{3.0};

    void validate() const;
};

struct BathPair {
    BathParams left{Side::Left, 0.01, 3.0};
    BathParams right{Side::Right, 0.01, 3.0};

    void validate() const;
    const BathParams& of(Side side) const { return side == Side::Left ? left : right; }
};

// Rate constants of one bath over one temperature hold, in units of omega0.
// The naming convention keeps k_u = Gamma*(1+N) as the gain rate of the ground
// population (emission into the bath) and k_d = Gamma*N as its loss rate;
// A = -(k_d + k_u), B = -k_u.
struct BathRates {
    double N{0};
    double k_u{0};
    double k_d{0};
    double A{0};
    double B{0};
};

struct IntervalRates {
    BathRates left, right;
    double K_u{0};
    double K_d{0};
    double Lambda{0};  // -(K_d + K_u), strictly negative when any coupling is on
    double rho_s{0};   // K_u/(K_d + K_u); set to 1/2 when both couplings vanish
                       // (the value then enters every formula with zero weight)

    const BathRates& of(Side side) const { return side == Side::Left ? left : right; }
};

// N = 1/(exp(beta_tilde) - 1)
double bose_occupation(double beta_tilde);

// Gamma = 2*pi*h(omega0) = 2*pi*s*exp(-1/omega_c)
double coupling_gamma(const BathParams& bath);

// Ground-state weight exp(b)/(exp(b)+1) of a thermal two-level state
double gibbs_ground_population(double beta_tilde);

IntervalRates interval_rates_beta(const BathPair& baths, double beta_left, double beta_right);
IntervalRates interval_rates(const BathPair& baths, double T_left_K, double T_right_K,
                             const units::UnitSystem& u);

// Counting-field coefficients (A_nu, B_nu) of the chosen bath
std::pair<double, double> markov_generator(const IntervalRates& rates, Side which);

}
