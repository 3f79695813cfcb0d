#include "exlat/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

namespace exlat {

namespace {

std::string fmt_violation(const std::string& field, double value, const std::string& why) {
    std::ostringstream os;
    os << field << " = " << value << ": " << why;
    return os.str();
}

} // namespace

ValidationReport validate_config(const LatticeConfig& cfg, const DipoleOrientation& dip) {
    ValidationReport rep;
    if (!(cfg.a > 0.0))
        rep.violations.push_back(fmt_violation("a_angstrom", cfg.a, "lattice constant must be > 0"));
    if (cfg.n_x < 1)
        rep.violations.push_back(fmt_violation("n_x", cfg.n_x, "site count must be >= 1"));
    if (cfg.n_y < 1)
        rep.violations.push_back(fmt_violation("n_y", cfg.n_y, "site count must be >= 1"));
    if (!(cfg.e_a > 0.0))
        rep.violations.push_back(fmt_violation("e_a_ev", cfg.e_a, "transition energy must be > 0"));
    if (!(cfg.e_a - 4.0 * std::abs(cfg.j) > 0.0))
        rep.violations.push_back(fmt_violation("j_ev", cfg.j, "band touches zero: E_A - 4|J| must be > 0"));
    if (!(dip.mu > 0.0))
        rep.violations.push_back(fmt_violation("mu_e_angstrom", dip.mu, "dipole magnitude must be > 0"));
    if (!(dip.theta >= 0.0 && dip.theta <= std::numbers::pi))
        rep.violations.push_back(fmt_violation("theta_rad", dip.theta, "theta must lie in [0, pi]"));
    if (!(dip.phi >= 0.0 && dip.phi < 2.0 * std::numbers::pi))
        rep.violations.push_back(fmt_violation("phi_rad", dip.phi, "phi must lie in [0, 2*pi)"));
    return rep;
}

ParsedConfig parse_config(std::istream& in) {
    ParsedConfig out;
    std::string line;
    int lineno = 0;

    auto trim = [](std::string s) {
        const char* ws = " \t\r";
        auto b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string{};
        auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected `key = value`, got `" + line + "`");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));

        double num = 0.0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
        if (ec != std::errc{} || ptr != val.data() + val.size())
            throw ConfigError("line " + std::to_string(lineno) + ": unparsable value `" + val + "` for key `" + key + "`");

        if (key == "a_angstrom") {
            out.lattice.a = num;
        } else if (key == "n_x" || key == "n_y") {
            if (num != std::floor(num))
                throw ConfigError("line " + std::to_string(lineno) + ": " + key + " must be an integer");
            (key == "n_x" ? out.lattice.n_x : out.lattice.n_y) = static_cast<int>(num);
        } else if (key == "e_a_ev") {
            out.lattice.e_a = num;
        } else if (key == "j_ev") {
            out.lattice.j = num;
        } else if (key == "mu_e_angstrom") {
            out.dipole.mu = num;
        } else if (key == "theta_rad") {
            out.dipole.theta = num;
        } else if (key == "phi_rad") {
            out.dipole.phi = num;
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key `" + key + "`");
        }
    }

    auto rep = validate_config(out.lattice, out.dipole);
    if (!rep.ok()) {
        std::string msg = "invalid configuration:";
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw ConfigError(msg);
    }
    return out;
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

} // namespace exlat
