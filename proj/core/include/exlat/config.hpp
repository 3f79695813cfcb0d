// config.hpp — lattice and dipole configuration types, validation, and the
// flat key=value config-file parser.

#pragma once

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace exlat {

// Square lattice of two-level emitters.
struct LatticeConfig {
    double a = 1000.0;   // lattice constant, Angstrom
    int n_x = 100;       // site counts
    int n_y = 100;
    double e_a = 1.0;    // atomic transition energy, eV
    double j = 0.0;      // nearest-neighbor hopping, eV (0 = flat band)

    std::size_t site_count() const { return static_cast<std::size_t>(n_x) * static_cast<std::size_t>(n_y); }
};

// Transition dipole: magnitude plus tilt theta from the lattice normal and
// in-plane angle phi between k and the in-plane dipole component.
struct DipoleOrientation {
    double mu = 1.0;     // e*Angstrom
    double theta = 0.0;  // rad, [0, pi]
    double phi = 0.0;    // rad, [0, 2*pi)

    double mu_parallel() const { return mu * std::sin(theta); }
    double mu_z() const { return mu * std::cos(theta); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every type invariant; returns one entry per violation naming the
// field and the offending value.
ValidationReport validate_config(const LatticeConfig& cfg, const DipoleOrientation& dip);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParsedConfig {
    LatticeConfig lattice;
    DipoleOrientation dipole;
};

// Parses the flat `key = value` format ('#' comments, blank lines allowed).
// Recognized keys: a_angstrom, n_x, n_y, e_a_ev, j_ev, mu_e_angstrom,
// theta_rad, phi_rad. Unknown keys, unparsable values and invariant
// violations throw ConfigError with a line-numbered diagnostic.
// Omitted keys keep the defaults above (a = 1000 A, mu = 1 eA, E_A = 1 eV, J = 0).
ParsedConfig parse_config(std::istream& in);
ParsedConfig parse_config_file(const std::string& path);

} // namespace exlat
