#include "exlat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "exlat/damping.hpp"

namespace exlat {

namespace {

constexpr double kSingularHalfWidth = 0.02;  // relative to E_ex
constexpr double kConvergenceTol = 1e-3;     // successive-resolution relative difference
constexpr double kConvergenceFloor = 1e-18;  // eV, absolute floor for near-zero rates
constexpr double kStepConsistencyFactor = 3.0;

void check_settings(const PhysicalConstants& consts, const OracleSettings& s, double e_ex) {
    if (!(s.eta > 0.0)) throw OracleError("oracle settings: eta must be > 0");
    if (!(consts.hbar_c * s.q_z_max >= 5.0 * e_ex))
        throw OracleError("oracle settings: hbar*c*q_z_max must be >= 5*E_ex");
    if (s.n_points < 2) throw OracleError("oracle settings: n_points must be >= 2");
    if (s.eta_sequence.size() < 3)
        throw OracleError("oracle settings: eta_sequence needs at least 3 values");
    for (std::size_t i = 0; i < s.eta_sequence.size(); ++i) {
        if (!(s.eta_sequence[i] > 0.0))
            throw OracleError("oracle settings: eta_sequence values must be > 0");
        if (i > 0 && !(s.eta_sequence[i] < s.eta_sequence[i - 1]))
            throw OracleError("oracle settings: eta_sequence must be strictly decreasing");
    }
}

// Composite Simpson of the broadened mode-sum integrand over [0, q_z_max].
double simpson_rate(const PhysicalConstants& consts, const CouplingModel& model,
                    double eta, double q_z_max, int n) {
    if (n % 2 != 0) ++n;
    const double mu_par = model.dipole.mu_parallel();
    const double mu_z = model.dipole.mu_z();
    const double mu2 = model.dipole.mu * model.dipole.mu;
    const double cp = std::cos(model.dipole.phi);
    const double k = model.k;
    const double k2 = k * k;
    const double hc = consts.hbar_c;
    const double a2 = model.lattice.a * model.lattice.a;
    const double mode_factor = 4.0 * std::numbers::pi * consts.coulomb_factor / (2.0 * a2);
    const double h = q_z_max / n;

    auto integrand = [&](double q_z) {
        const double q2 = k2 + q_z * q_z;
        if (q2 == 0.0) return 0.0; // k = 0, q_z = 0: polarization sum limit is transverse
        const double q = std::sqrt(q2);
        const double dot = mu_par * k * cp + mu_z * q_z;
        const double pol = mu2 - dot * dot / q2;
        const double de = model.e_ex - hc * q;
        const double lorentz = (eta / std::numbers::pi) / (de * de + eta * eta);
        return mode_factor * hc * q * pol * lorentz;
    };

    double sum = integrand(0.0) + integrand(q_z_max);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * integrand(i * h);
    return sum * h / 3.0;
}

} // namespace

OracleSettings OracleSettings::defaults(const PhysicalConstants& consts, double e_ex) {
    OracleSettings s;
    s.q_z_max = 10.0 * e_ex / consts.hbar_c;
    return s;
}

double polarization_sum(const std::array<double, 3>& mu_vec, const std::array<double, 3>& q_vec) {
    const double q2 = q_vec[0] * q_vec[0] + q_vec[1] * q_vec[1] + q_vec[2] * q_vec[2];
    if (q2 == 0.0) throw std::invalid_argument("polarization_sum: q = 0 has no direction");
    const double mu2 = mu_vec[0] * mu_vec[0] + mu_vec[1] * mu_vec[1] + mu_vec[2] * mu_vec[2];
    const double dot = mu_vec[0] * q_vec[0] + mu_vec[1] * q_vec[1] + mu_vec[2] * q_vec[2];
    return mu2 - dot * dot / q2;
}

OracleResult golden_rule_rate(const PhysicalConstants& consts, const CouplingModel& model,
                              const OracleSettings& settings) {
    check_settings(consts, settings, model.e_ex);
    const double e_0 = consts.hbar_c * model.k;
    if (std::abs(e_0 - model.e_ex) < kSingularHalfWidth * model.e_ex)
        throw OracleError("golden_rule_rate: E_0 inside the singular band around E_ex");

    OracleResult out;
    out.raw.reserve(settings.eta_sequence.size());
    for (double eta : settings.eta_sequence) {
        const double coarse = simpson_rate(consts, model, eta, settings.q_z_max, settings.n_points);
        const double fine = simpson_rate(consts, model, eta, settings.q_z_max, 2 * settings.n_points);
        const double diff = std::abs(fine - coarse);
        if (diff > kConvergenceTol * std::abs(fine) + kConvergenceFloor)
            throw OracleError("golden_rule_rate: quadrature not converged at eta = " +
                              std::to_string(eta) + " (refinement moved the result by >0.1%)");
        out.quadrature_error = std::max(out.quadrature_error, diff);
        out.raw.push_back(fine);
    }

    // Least-squares quadratic in eta; the constant term is the eta -> 0 limit.
    // Normal equations for sum (a + b*eta + c*eta^2 - rate)^2.
    const std::size_t m = settings.eta_sequence.size();
    double s[5] = {0, 0, 0, 0, 0};
    double t[3] = {0, 0, 0};
    for (std::size_t i = 0; i < m; ++i) {
        const double e = settings.eta_sequence[i];
        double p = 1.0;
        for (int j = 0; j < 5; ++j) { s[j] += p; p *= e; }
        p = 1.0;
        for (int j = 0; j < 3; ++j) { t[j] += p * out.raw[i]; p *= e; }
    }
    double A[3][4] = {{s[0], s[1], s[2], t[0]}, {s[1], s[2], s[3], t[1]}, {s[2], s[3], s[4], t[2]}};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = A[r][col] / A[col][col];
            for (int cc = col; cc < 4; ++cc) A[r][cc] -= f * A[col][cc];
        }
    }
    out.rate = A[0][3] / A[0][0];

    out.extrapolation_step = std::abs(out.raw[m - 2] - out.raw[m - 1]);
    out.correction = std::abs(out.rate - out.raw[m - 1]);
    // Near-linear eta-dependence means the remaining correction cannot exceed
    // a few final steps; a blow-up signals a bad fit.
    if (out.correction > kStepConsistencyFactor * out.extrapolation_step + kConvergenceFloor)
        throw OracleError("golden_rule_rate: eta extrapolation inconsistent with raw sequence");
    return out;
}

std::vector<OracleRow> oracle_sweep(const PhysicalConstants& consts, const LatticeConfig& cfg,
                                    double mu, const std::vector<double>& thetas,
                                    const std::vector<double>& phis,
                                    const std::vector<double>& e_0s, double e_ex,
                                    const OracleSettings& settings, unsigned n_workers) {
    std::vector<OracleRow> rows;
    rows.resize(thetas.size() * phis.size() * e_0s.size());

    auto compute_row = [&](std::size_t idx) {
        const std::size_t ie = idx % e_0s.size();
        const std::size_t ip = (idx / e_0s.size()) % phis.size();
        const std::size_t it = idx / (e_0s.size() * phis.size());
        OracleRow row;
        row.theta = thetas[it];
        row.phi = phis[ip];
        row.e_0 = e_0s[ie];

        DipoleOrientation dip{mu, row.theta, row.phi};
        row.closed_form = gamma_exciton(consts, cfg, dip, e_ex, row.e_0).gamma;
        try {
            CouplingModel model{dip, cfg, e_ex, row.e_0 / consts.hbar_c};
            row.oracle = golden_rule_rate(consts, model, settings).rate;
            const double denom = std::abs(row.closed_form);
            row.rel_err = denom > 0.0 ? std::abs(row.oracle - row.closed_form) / denom
                                      : std::abs(row.oracle);
        } catch (const OracleError& err) {
            row.flagged = true;
            row.note = err.what();
        }
        rows[idx] = std::move(row);
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

} // namespace exlat
