// emission.hpp — far-field emission of a long-wavelength exciton: field
// envelope, population decay and intensity pattern. Valid for ka << 1.

#pragma once

#include <array>
#include <stdexcept>

#include "exlat/config.hpp"
#include "exlat/constants.hpp"

namespace exlat {

// Field envelope in the orthonormal right-handed frame (k_hat, p_hat, z_hat)
// with p_hat = z_hat x k_hat. Components carry the dipole in e*Angstrom;
// prefactor is the amplitude scale E_0 * sqrt(4 pi coulomb_factor) /
// (2 hbar c a^2 sqrt(N)), chosen so prefactor^2 * |components|^2 is an
// intensity in eV/Angstrom^3 (an eps0-weighted field-squared).
struct FieldEnvelope {
    std::array<double, 3> components{}; // (V_k, V_p, V_z), e*Angstrom
    double prefactor = 0.0;
    double phase_wavevector = 0.0;      // k = E_0/(hbar c), 1/Angstrom
    bool long_wavelength_ok = true;     // false when ka > 0.1

    double squared_modulus() const {
        return components[0] * components[0] + components[1] * components[1] +
               components[2] * components[2];
    }
};

struct EmissionSample {
    double rho_x = 0.0; // Angstrom (intensity is rho-independent)
    double rho_y = 0.0;
    double z = 0.0;     // Angstrom
    double t = 0.0;     // s
    double intensity = 0.0; // eV/Angstrom^3
    bool retarded = true;   // t >= z/c
    bool long_wavelength_ok = true;
};

// Orientation factor of the intensity as written in the emission-pattern
// formula; equals |field_envelope components|^2 / mu^2.
double intensity_orientation_factor(double theta, double phi, double e_ex, double e_0);

// Envelope components:
//   V_k = (E_ex/E_0 - E_0/E_ex) mu_par cos(phi) - mu_z
//   V_p = (E_ex/E_0) mu_par sin(phi)
//   V_z = -mu_par cos(phi)
// Throws std::invalid_argument at E_0 <= 0 (the k_hat frame is degenerate);
// flags long_wavelength_ok = false when E_0 * a / (hbar c) > 0.1.
FieldEnvelope field_envelope(const PhysicalConstants& consts, const LatticeConfig& cfg,
                             const DipoleOrientation& dip, double e_ex, double e_0);

// Retarded exponential decay of the exciton population:
// initial * exp(-Gamma (t - z/c)); returns initial unchanged for t < z/c.
double exciton_population(const PhysicalConstants& consts, double initial, double gamma_ev,
                          double t_seconds, double z_angstrom);

// Single-exciton far-field intensity at height z and time t. Zero before the
// retarded onset t = z/c; independent of rho and of z except through the
// decay exponent.
EmissionSample emission_intensity(const PhysicalConstants& consts, const LatticeConfig& cfg,
                                  const DipoleOrientation& dip, double e_ex, double e_0,
                                  double gamma_ev, std::size_t n_sites, double t_seconds,
                                  double z_angstrom);

} // namespace exlat
