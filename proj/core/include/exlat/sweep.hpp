// sweep.hpp — figure-reproduction sweeps and CSV serialization.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "exlat/config.hpp"
#include "exlat/constants.hpp"
#include "exlat/damping.hpp"
#include "exlat/oracle.hpp"

namespace exlat {

enum class SweptVariable { photon_energy, phi, theta };

const char* swept_variable_name(SweptVariable v); // "E_0", "phi", "theta"

struct SweepSpec {
    std::string figure_id = "custom"; // 2, 3a, 3b, 4, 5a, 5b, 6a, 6b, 7a, 7b or custom
    SweptVariable variable = SweptVariable::photon_energy;
    double start = 0.0;
    double stop = 1.0;
    int n_samples = 2;
    // fixed parameters for whichever of (theta, phi, E_0) is not swept
    double theta = 0.0;
    double phi = 0.0;
    double e_0 = 0.0; // eV
};

// Expands a built-in figure id to the sweep it plots. E_0 ranges scale with
// E_A (the captions assume E_ex = 1 eV). Throws std::invalid_argument for an
// unknown id.
SweepSpec figure_spec(const std::string& id, double e_a = 1.0);

struct SweepRow {
    double value = 0.0; // swept variable sample
    DecayResult decay;
    bool has_oracle = false;
    double oracle = 0.0;   // eV
    double rel_err = 0.0;
    bool oracle_flagged = false;
};

// Evaluates gamma_exciton (and optionally the golden-rule oracle) per
// sample. Samples are start + i*(stop-start)/(n-1), ascending. Output is
// independent of n_workers. Divergence-flagged samples carry the marker on
// the DecayResult, never a capped float.
std::vector<SweepRow> run_sweep(const PhysicalConstants& consts, const SweepSpec& spec,
                                const LatticeConfig& cfg, const DipoleOrientation& dip,
                                bool with_oracle = false,
                                const std::optional<OracleSettings>& oracle_settings = {},
                                unsigned n_workers = 1);

// CSV: header `swept_var,value,gamma_ev,ratio,regime[,oracle_ev,rel_err]`,
// shortest round-trip decimals, LF endings, `DIVERGENT` sentinel for
// divergence-flagged gamma/ratio, `FLAGGED` for failed oracle cells.
// Returns bytes written.
std::size_t write_table(const std::vector<SweepRow>& rows, SweptVariable variable,
                        std::ostream& out);
std::size_t write_table_file(const std::vector<SweepRow>& rows, SweptVariable variable,
                             const std::string& path);

// CSV of (t_s, population, intensity) for a time grid at fixed height z.
// gamma is computed from the damping module for (e_ex, e_0).
std::size_t emission_report(const PhysicalConstants& consts, const LatticeConfig& cfg,
                            const DipoleOrientation& dip, double e_ex, double e_0,
                            std::size_t n_sites, const std::vector<double>& times_s,
                            double z_angstrom, std::ostream& out);

// CSV of an oracle_sweep table:
// theta,phi,e_0_ev,closed_form_ev,oracle_ev,rel_err,flag
std::size_t write_oracle_table(const std::vector<OracleRow>& rows, std::ostream& out);

// Shortest round-trip decimal rendering used by all CSV writers.
std::string format_double(double v);

} // namespace exlat
