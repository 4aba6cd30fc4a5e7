// correlation.hpp — bath correlation functions beyond the long-time limit and the
// time-dependent population decay rate Lambda(t) they induce

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qpump/bath.hpp"
#include "qpump/units.hpp"

namespace qpump::correlation {

// omega * coth(beta_tilde * omega / 2), series-expanded near omega = 0
double omega_coth_half(double beta_tilde, double omega);

// Phi(tau) for one bath at inverse temperature beta_tilde; tau in 1/omega0 units,
// negative tau handled through conjugation symmetry. Frequency quadrature runs
// over [0, 50 omega_c] after a tail-bound check on the integrand envelope.
std::complex<double> bath_correlation(const bath::BathParams& bath, double beta_tilde, double tau,
                                      double rel_tol = 1e-8);

// (V_plus, V_minus) combining both baths at scaled time tau
std::pair<double, double> v_kernels(const bath::BathPair& baths, double beta_left,
                                    double beta_right, double tau);

// Lambda(t) = -integral_0^t (V_plus + V_minus) d tau, evaluated through the
// single-frequency identity V_plus + V_minus = 4 cos(tau) sum_nu Re Phi_nu(tau)
double lambda_of_t(const bath::BathPair& baths, double beta_left, double beta_right, double t,
                   double rel_tol = 1e-7);

struct TemperatureSetting {
    std::string label;  // used verbatim in CSV output; keep free of commas
    double T_left_K{0};
    double T_right_K{0};
};

TemperatureSetting make_setting(double T_left_K, double T_right_K);

struct CorrelationTrace {
    std::string label;
    std::vector<double> tau_grid;
    std::vector<std::complex<double>> phi_left;
    std::vector<std::complex<double>> phi_right;
    std::vector<double> lambda_values;
    double lambda_markov{0};        // long-time asymptote from the rate module
    std::vector<double> rel_error;  // (Lambda(t) - Lambda_S)/Lambda_S
};

// Lambda samples accumulate segment by segment along the grid, so the cost scales
// with the total range rather than with the sum of the sample times.
CorrelationTrace trace_for_setting(const bath::BathPair& baths,
                                   const TemperatureSetting& setting, const units::UnitSystem& u,
                                   const std::vector<double>& t_grid);

std::vector<CorrelationTrace> relative_error_trace(const bath::BathPair& baths,
                                                   const std::vector<TemperatureSetting>& settings,
                                                   const units::UnitSystem& u,
                                                   const std::vector<double>& t_grid);

// CSV with header "t_scaled,lambda_t,lambda_markov,rel_error,setting_label"
void write_lambda_csv(std::ostream& out, const std::vector<CorrelationTrace>& traces);

}
