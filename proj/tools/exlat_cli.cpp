// exlat — radiative lifetime and emission of 2D-lattice excitons.
//
// Subcommands: gamma, kc, sweep, emission, oracle-check.
// All accept --config <path> (flat key=value file) and --out <path>.

#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <vector>

#include <CLI11.hpp>

#include "exlat/config.hpp"
#include "exlat/constants.hpp"
#include "exlat/damping.hpp"
#include "exlat/dispersion.hpp"
#include "exlat/oracle.hpp"
#include "exlat/sweep.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "configuration file (key = value lines)");
    cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
}

exlat::ParsedConfig load_config(const CommonOpts& opts) {
    if (opts.config_path.empty()) return {};
    return exlat::parse_config_file(opts.config_path);
}

// Returns an owning stream for --out, or null to use stdout.
std::unique_ptr<std::ofstream> open_out(const CommonOpts& opts, std::ostream*& out) {
    if (opts.out_path.empty()) {
        out = &std::cout;
        return nullptr;
    }
    auto file = std::make_unique<std::ofstream>(opts.out_path, std::ios::binary);
    if (!*file) throw std::runtime_error("cannot open output file: " + opts.out_path);
    out = file.get();
    return file;
}

std::vector<double> linspace(double start, double stop, int n) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v.push_back(n > 1 ? start + i * (stop - start) / (n - 1) : start);
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exlat: exciton radiative lifetime and emission in 2D optical lattices"};
    app.require_subcommand(1);
    exlat::PhysicalConstants consts;

    // gamma: single-point damping rate
    CommonOpts gamma_opts;
    double gamma_e0 = 0.5, gamma_eex = -1.0;
    auto* cmd_gamma = app.add_subcommand("gamma", "damping rate at one (theta, phi, E_0) point");
    add_common(cmd_gamma, gamma_opts);
    cmd_gamma->add_option("--e0", gamma_e0, "photon-line energy E_0 = hbar*c*k, eV")->required();
    cmd_gamma->add_option("--eex", gamma_eex, "exciton energy override, eV (default: band energy)");

    // kc: critical wavevector
    CommonOpts kc_opts;
    double kc_dx = 1.0, kc_dy = 0.0;
    auto* cmd_kc = app.add_subcommand("kc", "light-cone crossing (critical wavevector)");
    add_common(cmd_kc, kc_opts);
    cmd_kc->add_option("--dir-x", kc_dx, "k direction, x component");
    cmd_kc->add_option("--dir-y", kc_dy, "k direction, y component");

    // sweep
    CommonOpts sweep_opts;
    std::string figure_id;
    bool custom = false, with_oracle = false;
    std::string custom_var = "e0";
    double cstart = 0.0, cstop = 1.0, ctheta = 0.0, cphi = 0.0, ce0 = 0.0;
    int csamples = 101;
    unsigned workers = 1;
    auto* cmd_sweep = app.add_subcommand("sweep", "tabulate the damping rate along one variable");
    add_common(cmd_sweep, sweep_opts);
    auto* fig_opt = cmd_sweep->add_option("--figure", figure_id,
                                          "built-in sweep id: 2, 3a, 3b, 4, 5a, 5b, 6a, 6b, 7a, 7b");
    cmd_sweep->add_flag("--custom", custom, "custom sweep (use --var/--start/--stop/--samples)");
    cmd_sweep->add_option("--var", custom_var, "swept variable: e0, phi or theta");
    cmd_sweep->add_option("--start", cstart, "sweep start");
    cmd_sweep->add_option("--stop", cstop, "sweep stop");
    cmd_sweep->add_option("--samples", csamples, "number of samples (>= 2)");
    cmd_sweep->add_option("--theta", ctheta, "fixed theta, rad");
    cmd_sweep->add_option("--phi", cphi, "fixed phi, rad");
    cmd_sweep->add_option("--e0", ce0, "fixed E_0, eV");
    cmd_sweep->add_flag("--with-oracle", with_oracle, "add golden-rule oracle columns");
    cmd_sweep->add_option("--workers", workers, "worker threads (output is order-independent)");
    fig_opt->excludes("--custom");

    // emission
    CommonOpts em_opts;
    double em_e0 = 0.1, em_eex = -1.0, em_z = 0.0, em_tstart = 0.0, em_tstop = 0.0;
    int em_samples = 101;
    std::size_t em_sites = 0;
    auto* cmd_em = app.add_subcommand("emission", "population and intensity vs time at height z");
    add_common(cmd_em, em_opts);
    cmd_em->add_option("--e0", em_e0, "photon-line energy, eV")->required();
    cmd_em->add_option("--eex", em_eex, "exciton energy override, eV");
    cmd_em->add_option("--z", em_z, "height above the lattice plane, Angstrom");
    cmd_em->add_option("--t-start", em_tstart, "first time sample, s (default 0)");
    cmd_em->add_option("--t-stop", em_tstop, "last time sample, s")->required();
    cmd_em->add_option("--samples", em_samples, "number of time samples");
    cmd_em->add_option("--n-sites", em_sites, "site count N (default: n_x*n_y from config)");

    // oracle-check
    CommonOpts or_opts;
    int gt = 5, gp = 5, ge = 9;
    double e0_min = 0.05, e0_max = 0.85;
    unsigned or_workers = 1;
    auto* cmd_or = app.add_subcommand("oracle-check",
                                      "cross-validate the closed form against the golden-rule quadrature");
    add_common(cmd_or, or_opts);
    cmd_or->add_option("--grid-theta", gt, "theta samples over [0, pi/2]");
    cmd_or->add_option("--grid-phi", gp, "phi samples over [0, pi]");
    cmd_or->add_option("--grid-e0", ge, "E_0 samples over [--e0-min, --e0-max]");
    cmd_or->add_option("--e0-min", e0_min, "eV");
    cmd_or->add_option("--e0-max", e0_max, "eV");
    cmd_or->add_option("--workers", or_workers, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gamma->parsed()) {
            auto [cfg, dip] = load_config(gamma_opts);
            std::ostream* out = nullptr;
            auto file = open_out(gamma_opts, out);
            const double e_ex = gamma_eex > 0.0
                                    ? gamma_eex
                                    : exlat::exciton_energy(cfg, {gamma_e0 / consts.hbar_c, 0.0});
            const auto res = exlat::gamma_exciton(consts, cfg, dip, e_ex, gamma_e0);
            if (res.divergent) {
                *out << "gamma_ev = DIVERGENT\nratio = DIVERGENT\n";
            } else {
                *out << "gamma_ev = " << exlat::format_double(res.gamma) << '\n'
                     << "gamma_per_s = "
                     << exlat::format_double(consts.rate_to_inverse_seconds(res.gamma)) << '\n'
                     << "gamma_at_ev = " << exlat::format_double(res.gamma_at) << '\n'
                     << "ratio = " << exlat::format_double(res.ratio) << '\n';
            }
            *out << "regime = " << exlat::regime_name(res.regime) << '\n';
        } else if (cmd_kc->parsed()) {
            auto [cfg, dip] = load_config(kc_opts);
            std::ostream* out = nullptr;
            auto file = open_out(kc_opts, out);
            const auto cp = exlat::critical_k(consts, cfg, kc_dx, kc_dy);
            *out << "k_c_per_angstrom = " << exlat::format_double(cp.k_c) << '\n'
                 << "e_0_c_ev = " << exlat::format_double(cp.e_0_c) << '\n';
        } else if (cmd_sweep->parsed()) {
            auto [cfg, dip] = load_config(sweep_opts);
            exlat::SweepSpec spec;
            if (!figure_id.empty()) {
                spec = exlat::figure_spec(figure_id, cfg.e_a);
            } else if (custom) {
                if (custom_var == "e0") spec.variable = exlat::SweptVariable::photon_energy;
                else if (custom_var == "phi") spec.variable = exlat::SweptVariable::phi;
                else if (custom_var == "theta") spec.variable = exlat::SweptVariable::theta;
                else throw std::runtime_error("unknown --var: " + custom_var);
                spec.start = cstart;
                spec.stop = cstop;
                spec.n_samples = csamples;
                spec.theta = cmd_sweep->count("--theta") ? ctheta : dip.theta;
                spec.phi = cmd_sweep->count("--phi") ? cphi : dip.phi;
                spec.e_0 = ce0;
            } else {
                throw std::runtime_error("sweep: either --figure <id> or --custom is required");
            }
            const auto rows = exlat::run_sweep(consts, spec, cfg, dip, with_oracle, {}, workers);
            std::ostream* out = nullptr;
            auto file = open_out(sweep_opts, out);
            exlat::write_table(rows, spec.variable, *out);
        } else if (cmd_em->parsed()) {
            auto [cfg, dip] = load_config(em_opts);
            std::ostream* out = nullptr;
            auto file = open_out(em_opts, out);
            const double e_ex = em_eex > 0.0
                                    ? em_eex
                                    : exlat::exciton_energy(cfg, {em_e0 / consts.hbar_c, 0.0});
            const std::size_t n = em_sites ? em_sites : cfg.site_count();
            exlat::emission_report(consts, cfg, dip, e_ex, em_e0, n,
                                   linspace(em_tstart, em_tstop, em_samples), em_z, *out);
        } else if (cmd_or->parsed()) {
            auto [cfg, dip] = load_config(or_opts);
            std::ostream* out = nullptr;
            auto file = open_out(or_opts, out);
            const double e_ex = cfg.e_a; // flat band by default (J = 0)
            const auto settings = exlat::OracleSettings::defaults(consts, e_ex);
            const auto rows = exlat::oracle_sweep(
                consts, cfg, dip.mu, linspace(0.0, std::numbers::pi / 2.0, gt),
                linspace(0.0, std::numbers::pi, gp), linspace(e0_min, e0_max, ge), e_ex, settings,
                or_workers);
            exlat::write_oracle_table(rows, *out);
            double max_err = 0.0;
            for (const auto& r : rows)
                if (!r.flagged) max_err = std::max(max_err, r.rel_err);
            std::cerr << "max relative error: " << exlat::format_double(max_err) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
