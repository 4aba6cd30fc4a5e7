#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpump/units.hpp"

using namespace qpump;

namespace {

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}

TEST_CASE("default unit system pins the 25 meV splitting") {
    const units::UnitSystem u;
    CHECK(u.hbar_omega0_meV == 25.0);
    CHECK(rel_diff(u.hbar_omega0_over_kB_K(), 290.11296186418698) < 1e-14);
    CHECK(rel_diff(u.omega0_rad_per_s(), 37981683712846.317) < 1e-14);
    // 1/omega0 expressed in ps
    CHECK(rel_diff(u.time_unit_ps() * u.omega0_rad_per_s(), 1e12) < 1e-15);
    CHECK(u.time_unit_ps() == doctest::Approx(0.02632848).epsilon(1e-6));
}

TEST_CASE("doubling the splitting doubles the temperature scale exactly") {
    const units::UnitSystem base;
    const units::UnitSystem doubled(50.0);
    CHECK(doubled.hbar_omega0_over_kB_K() == 2.0 * base.hbar_omega0_over_kB_K());
    CHECK(doubled.omega0_rad_per_s() == 2.0 * base.omega0_rad_per_s());
}

TEST_CASE("unit system rejects a non-positive splitting") {
    CHECK_THROWS_AS(units::UnitSystem(0.0), std::invalid_argument);
    CHECK_THROWS_AS(units::UnitSystem(-25.0), std::invalid_argument);
}

TEST_CASE("beta_tilde conversion matches hand-computed values") {
    const units::UnitSystem u;
    CHECK(rel_diff(units::beta_tilde_from_kelvin(200.0, u), 1.4505648093209349) < 1e-14);
    CHECK(rel_diff(units::beta_tilde_from_kelvin(100.0, u), 2.9011296186418698) < 1e-14);
    CHECK(rel_diff(units::beta_tilde_from_kelvin(300.0, u), 0.96704320621395661) < 1e-14);
    // protocol start temperature 200 + 100 cos(pi/4)
    CHECK(rel_diff(units::beta_tilde_from_kelvin(270.71067811865475, u), 1.071671660240266) <
          1e-14);
}

TEST_CASE("temperature round trip through beta_tilde") {
    const units::UnitSystem u;
    for (double T : {50.0, 123.456, 290.11296186418698, 500.0}) {
        const double beta = units::beta_tilde_from_kelvin(T, u);
        CHECK(rel_diff(units::kelvin_from_beta_tilde(beta, u), T) < 1e-15);
    }
    CHECK_THROWS_AS(units::beta_tilde_from_kelvin(0.0, u), std::domain_error);
    CHECK_THROWS_AS(units::beta_tilde_from_kelvin(-1.0, u), std::domain_error);
    CHECK_THROWS_AS(units::kelvin_from_beta_tilde(0.0, u), std::domain_error);
}

TEST_CASE("interval duration for the reference cycle") {
    CHECK(rel_diff(units::interval_duration_s(5e12, 41), 3.0649684425266275e-14) < 1e-15);
    CHECK_THROWS_AS(units::interval_duration_s(0.0, 41), std::domain_error);
    CHECK_THROWS_AS(units::interval_duration_s(5e12, 0), std::domain_error);
}

TEST_CASE("scaled time of the reference interval is about 1.164") {
    const units::UnitSystem u;
    const double dt = units::interval_duration_s(5e12, 41);
    CHECK(rel_diff(units::scaled_time(dt, u), 1.1641266197390155) < 1e-14);
    CHECK(rel_diff(units::seconds_from_scaled(units::scaled_time(dt, u), u), dt) < 1e-15);
}
