// adiabatic.hpp — continuous-driving limit: dynamical current plus the geometric
// pumping current evaluated both as a line integral over one cycle and as a
// surface integral over the region enclosed in (T_L, T_R) space

#pragma once

#include <iosfwd>

#include "qpump/bath.hpp"
#include "qpump/protocol.hpp"
#include "qpump/units.hpp"

namespace qpump::adiabatic {

struct QuadResult {
    double value{0};  // current into the right bath, quanta per second
    double error{0};  // propagated quadrature error estimate, same units
};

struct SurfaceResult {
    double value{0};
    double error{0};
    bool degenerate{false};  // contour encloses no area; value forced to zero
};

struct AdiabaticResult {
    QuadResult J1_R;
    QuadResult J2_R_line;
    SurfaceResult J2_R_surface;
};

// d/dT of the Bose occupation at the level splitting, in 1/K
double bose_occupation_temperature_derivative(double T_kelvin, const units::UnitSystem& u);

QuadResult dynamical_current(const protocol::ModulationProtocol& p, const bath::BathPair& baths,
                             const units::UnitSystem& u);

QuadResult geometric_current_line(const protocol::ModulationProtocol& p,
                                  const bath::BathPair& baths, const units::UnitSystem& u);

SurfaceResult geometric_current_surface(const protocol::ModulationProtocol& p,
                                        const bath::BathPair& baths, const units::UnitSystem& u);

AdiabaticResult compute(const protocol::ModulationProtocol& p, const bath::BathPair& baths,
                        const units::UnitSystem& u);

// CSV with header "method,J1_R,J2_R,quad_err" (rows line, surface); J1_R has a
// single computation route so both rows repeat it, quad_err is the J2 estimate.
void write_adiabatic_csv(std::ostream& out, const AdiabaticResult& result);

}
