// adiabatic.cpp

#include "qpump/adiabatic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "qpump/csv.hpp"
#include "qpump/quadrature.hpp"

namespace qpump::adiabatic {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Largest |f| over a uniform probe grid; pins the absolute quadrature floor so
// integrals that cancel to zero (symmetric protocols) still converge.
template <typename F>
double probe_scale(F&& f, double a, double b, int count = 64) {
    double scale = 0.0;
    for (int i = 0; i <= count; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(count);
        scale = std::max(scale, std::abs(f(x)));
    }
    return scale;
}

template <typename F>
quad::Result integrate_with_floor(F&& f, double a, double b, double rel_tol) {
    const double scale = probe_scale(f, a, b);
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-13 * scale * (b - a);
    if (scale == 0.0) return {0.0, 0.0, 0, 0};
    return quad::integrate(f, a, b, opt);
}

struct RatesAtPhase {
    double gamma_left;
    double gamma_right;
    double N_left;
    double N_right;
    double K;  // sum of Gamma_nu (1 + 2 N_nu)
};

RatesAtPhase rates_at_phase(const protocol::ModulationProtocol& p, const bath::BathPair& baths,
                            const units::UnitSystem& u, double theta) {
    const auto [tl, tr] = p.sample_phase(theta);
    RatesAtPhase r;
    r.gamma_left = bath::coupling_gamma(baths.left);
    r.gamma_right = bath::coupling_gamma(baths.right);
    r.N_left = bath::bose_occupation(units::beta_tilde_from_kelvin(tl, u));
    r.N_right = bath::bose_occupation(units::beta_tilde_from_kelvin(tr, u));
    r.K = r.gamma_left * (1.0 + 2.0 * r.N_left) + r.gamma_right * (1.0 + 2.0 * r.N_right);
    return r;
}

}

double bose_occupation_temperature_derivative(double T_kelvin, const units::UnitSystem& u) {
    const double b = units::beta_tilde_from_kelvin(T_kelvin, u);
    // dN/dT = (b/T) e^{-b} / (1 - e^{-b})^2, written to stay finite for large b
    const double em = std::exp(-b);
    const double denom = -std::expm1(-b);
    return (b / T_kelvin) * em / (denom * denom);
}

QuadResult dynamical_current(const protocol::ModulationProtocol& p, const bath::BathPair& baths,
                             const units::UnitSystem& u) {
    p.validate();
    baths.left.validate();
    baths.right.validate();
    if (bath::coupling_gamma(baths.left) * bath::coupling_gamma(baths.right) == 0.0)
        return {0.0, 0.0};

    const auto integrand = [&](double theta) {
        const auto r = rates_at_phase(p, baths, u, theta);
        return r.gamma_left * r.gamma_right * (r.N_left - r.N_right) / r.K;
    };
    const auto q = integrate_with_floor(integrand, 0.0, two_pi, 1e-9);
    const double factor = u.omega0_rad_per_s() / two_pi;
    return {factor * q.value, factor * q.error};
}

QuadResult geometric_current_line(const protocol::ModulationProtocol& p,
                                  const bath::BathPair& baths, const units::UnitSystem& u) {
    p.validate();
    baths.left.validate();
    baths.right.validate();

    const auto integrand = [&](double theta) {
        const auto r = rates_at_phase(p, baths, u, theta);
        if (r.K == 0.0) return 0.0;
        const auto [tl, tr] = p.sample_phase(theta);
        const auto [dtl, dtr] = p.phase_derivative(theta);
        // d rho_s / d theta through the chain rule; K_u' = sum Gamma dN/dT dT/dtheta
        const double ku_prime = r.gamma_left * bose_occupation_temperature_derivative(tl, u) * dtl +
                                r.gamma_right * bose_occupation_temperature_derivative(tr, u) * dtr;
        const double rho_s_prime = -ku_prime * (r.gamma_left + r.gamma_right) / (r.K * r.K);
        const double weight = r.gamma_right * (1.0 + 2.0 * r.N_right) / r.K;
        return weight * rho_s_prime;
    };
    const auto q = integrate_with_floor(integrand, 0.0, two_pi, 1e-9);
    const double factor = 1.0 / p.period_s();
    return {factor * q.value, factor * q.error};
}

SurfaceResult geometric_current_surface(const protocol::ModulationProtocol& p,
                                        const bath::BathPair& baths, const units::UnitSystem& u) {
    p.validate();
    baths.left.validate();
    baths.right.validate();

    const double delta_phase = p.right.phase_rad - p.left.phase_rad;
    // Signed Jacobian of (x', y') in the unit disk -> (T_L, T_R); its sign is the
    // traversal orientation, zero means the contour collapses to a line or point.
    const double jacobian = -p.left.dT_K * p.right.dT_K * std::sin(delta_phase);
    if (jacobian == 0.0) return {0.0, 0.0, true};
    if (bath::coupling_gamma(baths.left) * bath::coupling_gamma(baths.right) == 0.0)
        return {0.0, 0.0, false};

    const double cos_dp = std::cos(delta_phase);
    const double sin_dp = std::sin(delta_phase);
    const auto density = [&](double x, double y) {
        const double tl = p.left.T0_K + p.left.dT_K * x;
        const double tr = p.right.T0_K + p.right.dT_K * (x * cos_dp - y * sin_dp);
        const double gl = bath::coupling_gamma(baths.left);
        const double gr = bath::coupling_gamma(baths.right);
        const double nl = bath::bose_occupation(units::beta_tilde_from_kelvin(tl, u));
        const double nr = bath::bose_occupation(units::beta_tilde_from_kelvin(tr, u));
        const double k = gl * (1.0 + 2.0 * nl) + gr * (1.0 + 2.0 * nr);
        return 2.0 * gl * gr * (gl + gr) / (k * k * k) *
               bose_occupation_temperature_derivative(tl, u) *
               bose_occupation_temperature_derivative(tr, u);
    };

    // The density is strictly positive, so the inner angular integral never
    // cancels; a modest absolute floor still guards the r = 0 limit.
    const double center_scale = std::abs(density(0.0, 0.0));
    quad::Options inner_opt;
    inner_opt.rel_tol = 1e-10;
    inner_opt.abs_tol = 1e-15 * center_scale * two_pi;
    const auto ring = [&](double r) {
        const auto q = quad::integrate(
            [&](double alpha) { return density(r * std::cos(alpha), r * std::sin(alpha)); }, 0.0,
            two_pi, inner_opt);
        return r * q.value;
    };
    quad::Options outer_opt;
    outer_opt.rel_tol = 1e-8;
    outer_opt.abs_tol = 1e-15 * center_scale * std::numbers::pi;
    const auto q = quad::integrate(ring, 0.0, 1.0, outer_opt);

    const double factor = jacobian / p.period_s();
    return {factor * q.value, std::abs(factor) * q.error, false};
}

AdiabaticResult compute(const protocol::ModulationProtocol& p, const bath::BathPair& baths,
                        const units::UnitSystem& u) {
    AdiabaticResult result;
    result.J1_R = dynamical_current(p, baths, u);
    result.J2_R_line = geometric_current_line(p, baths, u);
    result.J2_R_surface = geometric_current_surface(p, baths, u);
    return result;
}

void write_adiabatic_csv(std::ostream& out, const AdiabaticResult& result) {
    out << "method,J1_R,J2_R,quad_err\n";
    out << "line," << csv::format_double(result.J1_R.value) << ','
        << csv::format_double(result.J2_R_line.value) << ','
        << csv::format_double(result.J2_R_line.error) << '\n';
    out << "surface," << csv::format_double(result.J1_R.value) << ','
        << csv::format_double(result.J2_R_surface.value) << ','
        << csv::format_double(result.J2_R_surface.error) << '\n';
}

}
