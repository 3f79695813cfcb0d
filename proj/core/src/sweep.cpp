#include "exlat/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "exlat/dispersion.hpp"
#include "exlat/emission.hpp"

namespace exlat {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

const char* swept_variable_name(SweptVariable v) {
    switch (v) {
        case SweptVariable::photon_energy: return "E_0";
        case SweptVariable::phi: return "phi";
        case SweptVariable::theta: return "theta";
    }
    return "?";
}

SweepSpec figure_spec(const std::string& id, double e_a) {
    SweepSpec s;
    s.figure_id = id;
    if (id == "2" || id == "3a" || id == "3b" || id == "4") {
        // damping rate vs E_0; the grid lands exactly on E_0 = E_A so the
        // light-cone divergence shows up as one flagged sample
        s.variable = SweptVariable::photon_energy;
        s.start = 0.0;
        s.stop = 1.2 * e_a;
        s.n_samples = 121;
        if (id == "2") { s.theta = 0.0; s.phi = 0.0; }
        if (id == "3a") { s.theta = kPi / 4.0; s.phi = 0.0; }
        if (id == "3b") { s.theta = kPi / 4.0; s.phi = kPi / 2.0; }
        if (id == "4") { s.theta = kPi / 2.0; s.phi = 0.0; }
    } else if (id == "5a" || id == "5b" || id == "6a" || id == "6b") {
        s.variable = SweptVariable::phi;
        s.start = 0.0;
        s.stop = 2.0 * kPi;
        s.n_samples = 201;
        s.theta = (id[0] == '5') ? kPi / 4.0 : kPi / 2.0;
        s.e_0 = (id[1] == 'a') ? 0.1 * e_a : 0.9 * e_a;
    } else if (id == "7a" || id == "7b") {
        s.variable = SweptVariable::theta;
        s.start = 0.0;
        s.stop = kPi;
        s.n_samples = 181;
        s.phi = kPi / 2.0;
        s.e_0 = (id == "7a") ? 0.1 * e_a : 0.9 * e_a;
    } else {
        throw std::invalid_argument("figure_spec: unknown figure id `" + id + "`");
    }
    return s;
}

std::vector<SweepRow> run_sweep(const PhysicalConstants& consts, const SweepSpec& spec,
                                const LatticeConfig& cfg, const DipoleOrientation& dip,
                                bool with_oracle,
                                const std::optional<OracleSettings>& oracle_settings,
                                unsigned n_workers) {
    if (!(spec.start < spec.stop))
        throw std::invalid_argument("run_sweep: range start must be < stop");
    if (spec.n_samples < 2)
        throw std::invalid_argument("run_sweep: n_samples must be >= 2");

    const double step = (spec.stop - spec.start) / (spec.n_samples - 1);
    std::vector<SweepRow> rows(static_cast<std::size_t>(spec.n_samples));

    auto compute_row = [&](std::size_t i) {
        SweepRow row;
        row.value = spec.start + static_cast<double>(i) * step;

        double theta = spec.theta, phi = spec.phi, e_0 = spec.e_0;
        switch (spec.variable) {
            case SweptVariable::photon_energy: e_0 = row.value; break;
            case SweptVariable::phi: phi = row.value; break;
            case SweptVariable::theta: theta = row.value; break;
        }
        DipoleOrientation d{dip.mu, theta, phi};
        // k taken along the x axis; phi is measured relative to k
        const double e_ex = exciton_energy(cfg, {e_0 / consts.hbar_c, 0.0});
        row.decay = gamma_exciton(consts, cfg, d, e_ex, e_0);

        if (with_oracle) {
            row.has_oracle = true;
            const auto settings =
                oracle_settings ? *oracle_settings : OracleSettings::defaults(consts, e_ex);
            try {
                CouplingModel model{d, cfg, e_ex, e_0 / consts.hbar_c};
                row.oracle = golden_rule_rate(consts, model, settings).rate;
                const double denom = std::abs(row.decay.gamma);
                row.rel_err = (denom > 0.0 && std::isfinite(denom))
                                  ? std::abs(row.oracle - row.decay.gamma) / denom
                                  : std::abs(row.oracle);
            } catch (const OracleError&) {
                row.oracle_flagged = true;
            }
        }
        rows[i] = row;
    };

    if (n_workers <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) compute_row(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < rows.size(); i += n_workers) compute_row(i);
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::size_t write_table(const std::vector<SweepRow>& rows, SweptVariable variable,
                        std::ostream& out) {
    std::ostringstream os;
    const bool with_oracle = !rows.empty() && rows.front().has_oracle;
    os << "swept_var,value,gamma_ev,ratio,regime";
    if (with_oracle) os << ",oracle_ev,rel_err";
    os << '\n';

    const char* var = swept_variable_name(variable);
    for (const auto& row : rows) {
        os << var << ',' << format_double(row.value) << ',';
        if (row.decay.divergent)
            os << "DIVERGENT,DIVERGENT,";
        else
            os << format_double(row.decay.gamma) << ',' << format_double(row.decay.ratio) << ',';
        os << regime_name(row.decay.regime);
        if (with_oracle) {
            if (row.oracle_flagged)
                os << ",FLAGGED,FLAGGED";
            else
                os << ',' << format_double(row.oracle) << ',' << format_double(row.rel_err);
        }
        os << '\n';
    }
    const std::string text = os.str();
    out << text;
    return text.size();
}

std::size_t write_table_file(const std::vector<SweepRow>& rows, SweptVariable variable,
                             const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_table_file: cannot open " + path);
    return write_table(rows, variable, out);
}

std::size_t emission_report(const PhysicalConstants& consts, const LatticeConfig& cfg,
                            const DipoleOrientation& dip, double e_ex, double e_0,
                            std::size_t n_sites, const std::vector<double>& times_s,
                            double z_angstrom, std::ostream& out) {
    const auto decay = gamma_exciton(consts, cfg, dip, e_ex, e_0);
    if (decay.divergent)
        throw std::runtime_error("emission_report: damping rate divergent at this E_0");

    std::ostringstream os;
    os << "t_s,population,intensity\n";
    for (double t : times_s) {
        const double pop = exciton_population(consts, 1.0, decay.gamma, t, z_angstrom);
        const auto sample =
            emission_intensity(consts, cfg, dip, e_ex, e_0, decay.gamma, n_sites, t, z_angstrom);
        os << format_double(t) << ',' << format_double(pop) << ','
           << format_double(sample.intensity) << '\n';
    }
    const std::string text = os.str();
    out << text;
    return text.size();
}

std::size_t write_oracle_table(const std::vector<OracleRow>& rows, std::ostream& out) {
    std::ostringstream os;
    os << "theta,phi,e_0_ev,closed_form_ev,oracle_ev,rel_err,flag\n";
    for (const auto& row : rows) {
        os << format_double(row.theta) << ',' << format_double(row.phi) << ','
           << format_double(row.e_0) << ',' << format_double(row.closed_form) << ',';
        if (row.flagged)
            os << "FLAGGED,FLAGGED,1";
        else
            os << format_double(row.oracle) << ',' << format_double(row.rel_err) << ",0";
        os << '\n';
    }
    const std::string text = os.str();
    out << text;
    return text.size();
}

} // namespace exlat
