// constants.hpp — the single source of numeric physical constants.
//
// Unit system used throughout: energies in eV, lengths in Angstrom,
// dipole moments in e*Angstrom. Rates are carried as energies (hbar*Gamma
// in eV); rate_to_inverse_seconds gives the s^-1 value.

#pragma once

namespace exlat {

struct PhysicalConstants {
    // hbar*c, eV*Angstrom (CODATA)
    const double hbar_c = 1973.269804;
    // e^2/(4 pi eps0), eV*Angstrom. Resolves mu^2/eps0 terms as
    // 4*pi*coulomb_factor*(mu in e*Angstrom)^2 / (volume in Angstrom^3).
    const double coulomb_factor = 14.399645;
    // hbar, eV*s (exact since the 2019 SI redefinition)
    const double hbar_ev_s = 6.582119569e-16;

    // speed of light, Angstrom/s
    double speed_of_light() const { return hbar_c / hbar_ev_s; }

    double rate_to_inverse_seconds(double gamma_ev) const { return gamma_ev / hbar_ev_s; }
    double rate_to_ev(double rate_per_second) const { return rate_per_second * hbar_ev_s; }
};

} // namespace exlat
