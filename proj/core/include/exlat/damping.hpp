// damping.hpp — closed-form exciton radiative damping rate, the single-atom
// reference rate, regime classification, and the light-cone crossing solver.

#pragma once

#include <stdexcept>

#include "exlat/config.hpp"
#include "exlat/constants.hpp"

namespace exlat {

enum class Regime { superradiant, subradiant, metastable };

const char* regime_name(Regime r);

struct DecayResult {
    double gamma = 0.0;     // hbar*Gamma_ex, eV
    double gamma_at = 0.0;  // hbar*Gamma_at reference, eV
    double ratio = 0.0;     // Gamma_ex / Gamma_at
    Regime regime = Regime::metastable;
    // Set when E_0 falls inside the singular guard band around E_ex, where
    // the inverse-square-root factor diverges. gamma and ratio are +inf;
    // serializers must emit a sentinel instead of a number.
    bool divergent = false;
};

struct CriticalPoint {
    double k_c = 0.0;    // 1/Angstrom
    double e_0_c = 0.0;  // hbar*c*k_c, eV
    double dir_x = 1.0;  // unit 2-vector
    double dir_y = 0.0;
};

// Free-space rate of a single atom: hbar*Gamma_at = mu^2 E_A^3 / (3 pi eps0 (hbar c)^3).
double gamma_atom(const PhysicalConstants& consts, double e_a, double mu);

// Orientation factor of the damping rate as a function of x = E_0/E_ex:
//   sin^2(theta)(1 - cos^2(phi) x^2) + cos^2(theta) x^2
//   - 2 sin(theta)cos(theta)cos(phi) x sqrt(1 - x^2).
// Evaluated in the algebraically identical sum-of-squares form
//   (sin(theta)cos(phi)sqrt(1-x^2) - cos(theta) x)^2 + sin^2(theta)(1 - cos^2(phi)),
// which is non-negative by construction.
double rate_orientation_factor(double theta, double phi, double x);

// Radiative damping rate of an exciton at exciton energy E_ex and photon-line
// energy E_0 = hbar*c*k. Returns exactly 0 (metastable) for E_0 beyond the
// light cone; a divergence-flagged result inside the singular guard band
// |E_0 - E_ex| < 1e-9 * E_ex. The ratio is taken against gamma_atom
// evaluated at E_A = E_ex, so it is a pure geometry/orientation factor.
DecayResult gamma_exciton(const PhysicalConstants& consts, const LatticeConfig& cfg,
                          const DipoleOrientation& dip, double e_ex, double e_0);

Regime classify_regime(const DecayResult& result);

class NoCrossingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Light-cone crossing: bisection root of f(k) = hbar*c*k - E_ex(k*direction)
// on (0, pi/a], residual |f| <= 1e-12 eV. Requires E_A - 4|J| > 0 and
// hbar*c*pi/a > E_A + 4|J| (exactly one crossing); throws NoCrossingError
// otherwise.
CriticalPoint critical_k(const PhysicalConstants& consts, const LatticeConfig& cfg,
                         double dir_x = 1.0, double dir_y = 0.0);

} // namespace exlat
