// test_correlation.cpp

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qpump/bath.hpp"
#include "qpump/correlation.hpp"
#include "qpump/units.hpp"

using namespace qpump;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// zero-temperature part dropped: the model keeps only the thermal kernel
double im_phi_closed_form(const bath::BathParams& bath, double tau) {
    const double w2 = bath.omega_c * bath.omega_c;
    const double denom = 1.0 + w2 * tau * tau;
    return -2.0 * bath.s * w2 * bath.omega_c * tau / (denom * denom);
}

}

TEST_CASE("omega coth matches the direct form away from zero") {
    for (double beta : {0.3, 1.0707, 2.9}) {
        for (double w : {0.05, 0.4, 1.0, 6.0}) {
            const long double x = 0.5L * (long double)beta * (long double)w;
            const double direct = (double)((long double)w / std::tanh(x));
            CHECK(rel_diff(correlation::omega_coth_half(beta, w), direct) < 1e-13);
        }
    }
}

TEST_CASE("omega coth series branch stays continuous at the switch") {
    const double beta = 2.0;
    // x = beta*omega/2 crosses the 1e-4 series threshold here
    for (double w : {2e-6, 5e-5, 9.9e-5, 1.01e-4, 3e-4, 1e-3}) {
        const long double x = 0.5L * (long double)beta * (long double)w;
        const double direct = (double)((long double)w / std::tanh(x));
        CHECK(rel_diff(correlation::omega_coth_half(beta, w), direct) < 1e-12);
    }
    CHECK(correlation::omega_coth_half(beta, 0.0) == 2.0 / beta);
}

TEST_CASE("correlation real part at coincident times") {
    const units::UnitSystem u;
    const bath::BathParams b{bath::Side::Left};
    const double beta = units::beta_tilde_from_kelvin(200.0, u);
    const auto phi = correlation::bath_correlation(b, beta, 0.0);
    CHECK(rel_diff(phi.real(), 0.10164120286702731) < 1e-6);
    CHECK(phi.imag() == 0.0);
}

TEST_CASE("correlation real part at later times") {
    const units::UnitSystem u;
    const bath::BathParams b{bath::Side::Left};
    const double beta = units::beta_tilde_from_kelvin(200.0, u);
    // tau = 1 sits near a zero crossing, so compare absolutely
    const auto phi1 = correlation::bath_correlation(b, beta, 1.0);
    CHECK(std::abs(phi1.real() - (-1.6708288544888575e-5)) < 1e-10);
    const auto phi5 = correlation::bath_correlation(b, beta, 5.0);
    CHECK(rel_diff(phi5.real(), 0.00017516900215158566) < 1e-6);
}

TEST_CASE("correlation imaginary part matches its closed form") {
    const bath::BathParams b{bath::Side::Left};
    const double beta = 1.4505648093209349;
    for (double tau : {0.01, 0.1, 0.7, 1.0, 3.0, 20.0}) {
        const auto phi = correlation::bath_correlation(b, beta, tau);
        CHECK(rel_diff(phi.imag(), im_phi_closed_form(b, tau)) < 1e-7);
    }
    CHECK(rel_diff(im_phi_closed_form(b, 0.1), -0.045450719636394243) < 1e-15);
    CHECK(im_phi_closed_form(b, 1.0) == -0.0054);
}

TEST_CASE("negative time arguments conjugate the correlation") {
    const bath::BathParams b{bath::Side::Right, 0.02, 4.0};
    const double beta = 0.9;
    const auto plus = correlation::bath_correlation(b, beta, 1.3);
    const auto minus = correlation::bath_correlation(b, beta, -1.3);
    CHECK(minus.real() == plus.real());
    CHECK(minus.imag() == -plus.imag());
    CHECK(plus.imag() != 0.0);
}

TEST_CASE("correlation input validation") {
    const bath::BathParams b{bath::Side::Left};
    CHECK_THROWS_AS((void)correlation::bath_correlation(b, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)correlation::bath_correlation(b, -2.0, 1.0), std::domain_error);
    bath::BathParams bad{bath::Side::Left, -0.01, 3.0};
    CHECK_THROWS_AS((void)correlation::bath_correlation(bad, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("v kernels at a pinned point and their cosine identity") {
    const units::UnitSystem u;
    const bath::BathPair baths;
    const double beta_l = units::beta_tilde_from_kelvin(100.0, u);
    const double beta_r = units::beta_tilde_from_kelvin(200.0, u);
    const auto [v_plus, v_minus] = correlation::v_kernels(baths, beta_l, beta_r, 1.0);
    CHECK(rel_diff(v_plus, -0.022932445558685299) < 1e-6);
    CHECK(rel_diff(v_minus, 0.01341910098501583) < 1e-6);

    const double re_sum = correlation::bath_correlation(baths.left, beta_l, 1.0).real() +
                          correlation::bath_correlation(baths.right, beta_r, 1.0).real();
    const double identity = v_plus + v_minus - 4.0 * std::cos(1.0) * re_sum;
    CHECK(std::abs(identity) < 1e-12 * (std::abs(v_plus) + std::abs(v_minus)));
}

TEST_CASE("lambda of t at the origin and at a pinned time") {
    const units::UnitSystem u;
    const bath::BathPair baths;
    const double beta_l = units::beta_tilde_from_kelvin(100.0, u);
    const double beta_r = units::beta_tilde_from_kelvin(200.0, u);
    CHECK(correlation::lambda_of_t(baths, beta_l, beta_r, 0.0) == 0.0);
    CHECK_THROWS_AS((void)correlation::lambda_of_t(baths, beta_l, beta_r, -0.1),
                    std::domain_error);
    const double lam = correlation::lambda_of_t(baths, beta_l, beta_r, 1.164);
    CHECK(rel_diff(lam, -0.12586531972765887) < 1e-5);
}

TEST_CASE("lambda trace accumulates segments consistently") {
    const units::UnitSystem u;
    const bath::BathPair baths;
    const auto setting = correlation::make_setting(100.0, 200.0);
    CHECK(setting.label == "TL100_TR200");

    const std::vector<double> grid{0.005, 0.5, 1.164};
    const auto trace = correlation::trace_for_setting(baths, setting, u, grid);
    REQUIRE(trace.lambda_values.size() == 3);
    REQUIRE(trace.phi_left.size() == 3);

    const double beta_l = units::beta_tilde_from_kelvin(100.0, u);
    const double beta_r = units::beta_tilde_from_kelvin(200.0, u);
    CHECK(trace.lambda_markov == bath::interval_rates_beta(baths, beta_l, beta_r).Lambda);

    CHECK(rel_diff(trace.lambda_values[1],
                   correlation::lambda_of_t(baths, beta_l, beta_r, 0.5)) < 1e-5);
    CHECK(rel_diff(trace.lambda_values[2], -0.12586531972765887) < 1e-4);

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double expected = (trace.lambda_values[i] - trace.lambda_markov) /
                                trace.lambda_markov;
        CHECK(trace.rel_error[i] == expected);
        const auto phi = correlation::bath_correlation(baths.left, beta_l, grid[i]);
        CHECK(trace.phi_left[i].real() == phi.real());
        CHECK(trace.phi_left[i].imag() == phi.imag());
    }

    // the decay rate starts at zero, so the early relative error is near -1
    CHECK(trace.rel_error[0] < -0.9);
    CHECK(std::abs(trace.rel_error[2]) < 0.05);
}

TEST_CASE("lambda trace grid validation") {
    const units::UnitSystem u;
    const bath::BathPair baths;
    const auto setting = correlation::make_setting(150.0, 250.0);
    CHECK_THROWS_AS((void)correlation::trace_for_setting(baths, setting, u, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)correlation::trace_for_setting(baths, setting, u, {0.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)correlation::trace_for_setting(baths, setting, u, {0.5, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)correlation::trace_for_setting(baths, setting, u, {1.0, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("wider cutoffs track the asymptote more closely at late times") {
    const units::UnitSystem u;
    const auto setting = correlation::make_setting(100.0, 200.0);
    const std::vector<double> grid{1.5, 2.0, 3.0, 4.0, 6.0, 8.0};

    const auto tail_measure = [&](double omega_c) {
        bath::BathPair baths;
        baths.left.omega_c = omega_c;
        baths.right.omega_c = omega_c;
        const auto trace = correlation::trace_for_setting(baths, setting, u, grid);
        double total = 0.0;
        for (double r : trace.rel_error) total += std::abs(r);
        return total;
    };

    const double wide = tail_measure(5.0);
    const double mid = tail_measure(3.0);
    const double narrow = tail_measure(2.0);
    CHECK(wide < mid);
    CHECK(mid < narrow);
    CHECK(mid < 0.05 * grid.size());
}

TEST_CASE("lambda trace CSV layout") {
    const units::UnitSystem u;
    const bath::BathPair baths;
    const auto setting = correlation::make_setting(100.0, 200.0);
    const auto trace = correlation::trace_for_setting(baths, setting, u, {0.5, 1.0});

    std::ostringstream out;
    correlation::write_lambda_csv(out, {trace});
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "t_scaled,lambda_t,lambda_markov,rel_error,setting_label");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",TL100_TR200") != std::string::npos);
    }
    CHECK(rows == 2);
}
