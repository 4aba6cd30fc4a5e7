// correlation.cpp

#include "qpump/correlation.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qpump/csv.hpp"
#include "qpump/quadrature.hpp"

namespace qpump::correlation {

namespace {

// Scale of |Re Phi| used for absolute quadrature floors: the zero-time value is
// about s (omega_c^2 + 2 omega_c / beta_tilde).
double re_scale(const bath::BathParams& bath, double beta_tilde) {
    return bath.s * (bath.omega_c * bath.omega_c + 2.0 * bath.omega_c / beta_tilde);
}

double im_scale(const bath::BathParams& bath) { return bath.s * bath.omega_c * bath.omega_c; }

void check_tail(const bath::BathParams& bath, double beta_tilde) {
    // Integrand envelope s * omega coth(beta omega/2) e^{-omega/omega_c}; the
    // coupling prefactor cancels out of the ratio.
    const double upper = 50.0 * bath.omega_c;
    const double at_cutoff = omega_coth_half(beta_tilde, upper) * std::exp(-50.0);
    const double at_peak = omega_coth_half(beta_tilde, bath.omega_c) * std::exp(-1.0);
    if (!(at_cutoff <= 1e-12 * at_peak))
        throw std::runtime_error(
            "bath_correlation: integrand tail not negligible at the frequency cutoff");
}

double real_part(const bath::BathParams& bath, double beta_tilde, double tau, double rel_tol) {
    const double upper = 50.0 * bath.omega_c;
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-13 * re_scale(bath, beta_tilde);
    const auto q = quad::integrate(
        [&](double w) {
            return bath.s * omega_coth_half(beta_tilde, w) * std::exp(-w / bath.omega_c) *
                   std::cos(w * tau);
        },
        0.0, upper, opt);
    return q.value;
}

double imag_part(const bath::BathParams& bath, double tau, double rel_tol) {
    if (tau == 0.0) return 0.0;
    const double upper = 50.0 * bath.omega_c;
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-13 * im_scale(bath);
    const auto q = quad::integrate(
        [&](double w) { return w * std::exp(-w / bath.omega_c) * std::sin(w * tau); }, 0.0, upper,
        opt);
    return -bath.s * q.value;
}

// One segment of the Lambda(t) time integral
double lambda_segment(const bath::BathPair& baths, double beta_left, double beta_right, double a,
                      double b, double rel_tol, double abs_tol) {
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = abs_tol;
    const auto q = quad::integrate(
        [&](double tau) {
            const double re_sum = real_part(baths.left, beta_left, tau, 1e-9) +
                                  real_part(baths.right, beta_right, tau, 1e-9);
            return -4.0 * std::cos(tau) * re_sum;
        },
        a, b, opt);
    return q.value;
}

}

double omega_coth_half(double beta_tilde, double omega) {
    const double x = 0.5 * beta_tilde * omega;
    if (std::abs(x) < 1e-4)
        return 2.0 / beta_tilde + beta_tilde * omega * omega / 6.0;
    return omega / std::tanh(x);
}

std::complex<double> bath_correlation(const bath::BathParams& bath, double beta_tilde, double tau,
                                      double rel_tol) {
    bath.validate();
    if (!(beta_tilde > 0.0))
        throw std::domain_error("bath_correlation: beta_tilde must be positive");
    if (tau < 0.0) return std::conj(bath_correlation(bath, beta_tilde, -tau, rel_tol));
    check_tail(bath, beta_tilde);
    return {real_part(bath, beta_tilde, tau, rel_tol), imag_part(bath, tau, rel_tol)};
}

std::pair<double, double> v_kernels(const bath::BathPair& baths, double beta_left,
                                    double beta_right, double tau) {
    const auto phi_l = bath_correlation(baths.left, beta_left, tau);
    const auto phi_r = bath_correlation(baths.right, beta_right, tau);
    const double re_sum = phi_l.real() + phi_r.real();
    const double im_sum = phi_l.imag() + phi_r.imag();
    const double v_plus = 2.0 * (re_sum * std::cos(tau) + im_sum * std::sin(tau));
    const double v_minus = 2.0 * (re_sum * std::cos(tau) - im_sum * std::sin(tau));
    return {v_plus, v_minus};
}

double lambda_of_t(const bath::BathPair& baths, double beta_left, double beta_right, double t,
                   double rel_tol) {
    if (t < 0.0) throw std::domain_error("lambda_of_t: time must be non-negative");
    if (t == 0.0) return 0.0;
    const double markov = bath::interval_rates_beta(baths, beta_left, beta_right).Lambda;
    const double abs_floor = std::max(1e-11 * std::abs(markov), 1e-16);
    return lambda_segment(baths, beta_left, beta_right, 0.0, t, rel_tol, abs_floor);
}

TemperatureSetting make_setting(double T_left_K, double T_right_K) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "TL%.6g_TR%.6g", T_left_K, T_right_K);
    return {buffer, T_left_K, T_right_K};
}

CorrelationTrace trace_for_setting(const bath::BathPair& baths, const TemperatureSetting& setting,
                                   const units::UnitSystem& u, const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("trace_for_setting: empty time grid");
    double previous = 0.0;
    for (double t : t_grid) {
        if (!(t > previous))
            throw std::invalid_argument(
                "trace_for_setting: grid must be strictly increasing and start above 0");
        previous = t;
    }

    const double beta_left = units::beta_tilde_from_kelvin(setting.T_left_K, u);
    const double beta_right = units::beta_tilde_from_kelvin(setting.T_right_K, u);

    CorrelationTrace trace;
    trace.label = setting.label;
    trace.tau_grid = t_grid;
    trace.lambda_markov = bath::interval_rates_beta(baths, beta_left, beta_right).Lambda;

    const double segment_floor = 1e-9 * std::abs(trace.lambda_markov);
    double lambda = 0.0;
    double t_start = 0.0;
    for (double t : t_grid) {
        trace.phi_left.push_back(bath_correlation(baths.left, beta_left, t));
        trace.phi_right.push_back(bath_correlation(baths.right, beta_right, t));
        lambda += lambda_segment(baths, beta_left, beta_right, t_start, t, 1e-7, segment_floor);
        trace.lambda_values.push_back(lambda);
        trace.rel_error.push_back((lambda - trace.lambda_markov) / trace.lambda_markov);
        t_start = t;
    }
    return trace;
}

std::vector<CorrelationTrace> relative_error_trace(const bath::BathPair& baths,
                                                   const std::vector<TemperatureSetting>& settings,
                                                   const units::UnitSystem& u,
                                                   const std::vector<double>& t_grid) {
    std::vector<CorrelationTrace> traces;
    traces.reserve(settings.size());
    for (const auto& setting : settings)
        traces.push_back(trace_for_setting(baths, setting, u, t_grid));
    return traces;
}

void write_lambda_csv(std::ostream& out, const std::vector<CorrelationTrace>& traces) {
    out << "t_scaled,lambda_t,lambda_markov,rel_error,setting_label\n";
    for (const auto& trace : traces) {
        for (std::size_t i = 0; i < trace.tau_grid.size(); ++i) {
            out << csv::format_double(trace.tau_grid[i]) << ','
                << csv::format_double(trace.lambda_values[i]) << ','
                << csv::format_double(trace.lambda_markov) << ','
                << csv::format_double(trace.rel_error[i]) << ',' << trace.label << '\n';
        }
    }
}

}
