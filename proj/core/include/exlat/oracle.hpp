// oracle.hpp — independent golden-rule validation of the closed-form damping
// rate: direct quadrature of the photon mode sum with Lorentzian
// delta-broadening and eta -> 0 extrapolation. Shares no code path with the
// damping module.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlat/config.hpp"
#include "exlat/constants.hpp"

namespace exlat {

// One exciton-photon coupling configuration to be rated. The quantization
// length L cancels analytically between |g|^2 (~1/L) and the mode-sum
// measure (~L); no L parameter exists anywhere in the integrand.
struct CouplingModel {
    DipoleOrientation dipole;
    LatticeConfig lattice;
    double e_ex = 1.0; // eV
    double k = 0.0;    // in-plane photon wavevector magnitude, 1/Angstrom
};

struct OracleSettings {
    double eta = 1e-3;       // Lorentzian half-width for single-eta evaluation, eV
    double q_z_max = 0.0;    // integration cutoff, 1/Angstrom
    int n_points = 200000;   // composite-Simpson intervals (made even internally)
    std::vector<double> eta_sequence{1e-3, 5e-4, 2.5e-4}; // strictly decreasing, eV

    // Defaults per exciton energy: hbar*c*q_z_max = 10*E_ex.
    static OracleSettings defaults(const PhysicalConstants& consts, double e_ex);
};

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    double rate = 0.0;           // eta -> 0 extrapolated, eV
    std::vector<double> raw;     // converged rate per eta, same order as eta_sequence
    double quadrature_error = 0.0;  // max |refined - unrefined| over the sequence, eV
    double extrapolation_step = 0.0; // |raw[last-1] - raw[last]|, eV
    double correction = 0.0;     // |rate - raw[last]|, eV
};

// Polarization sum  sum_lambda |mu.e_q|^2 = |mu|^2 - |q.mu|^2/q^2,
// in (e*Angstrom)^2; bounded in [0, mu^2]. Throws at q = 0.
double polarization_sum(const std::array<double, 3>& mu_vec, const std::array<double, 3>& q_vec);

// Direct golden-rule rate: composite Simpson over q_z in [0, q_z_max] of
//   [hbar c q / (2 eps0 a^2)] * polarization_sum(mu, (k, 0, q_z))
//   * Lorentzian(E_ex - hbar c q; eta)
// for each eta in eta_sequence (with one automatic refinement doubling and a
// 0.1% convergence check), then extrapolated to eta = 0 by a quadratic fit.
// Preconditions: valid settings; E_0 = hbar*c*k outside the singular band
// |E_0 - E_ex| >= 0.02 E_ex. Violations throw OracleError.
OracleResult golden_rule_rate(const PhysicalConstants& consts, const CouplingModel& model,
                              const OracleSettings& settings);

struct OracleRow {
    double theta = 0.0;
    double phi = 0.0;
    double e_0 = 0.0;          // eV
    double closed_form = 0.0;  // eV
    double oracle = 0.0;       // eV
    double rel_err = 0.0;
    bool flagged = false;      // singular band or per-row oracle failure
    std::string note;
};

// Cross-validation table over the cartesian grid theta x phi x e_0, in that
// deterministic row order (e_0 fastest). Rows that violate the
// golden_rule_rate precondition or fail per-row are flagged, not fatal.
// n_workers > 1 distributes rows over threads; output is scheduling
// independent.
std::vector<OracleRow> oracle_sweep(const PhysicalConstants& consts, const LatticeConfig& cfg,
                                    double mu, const std::vector<double>& thetas,
                                    const std::vector<double>& phis,
                                    const std::vector<double>& e_0s, double e_ex,
                                    const OracleSettings& settings, unsigned n_workers = 1);

} // namespace exlat
