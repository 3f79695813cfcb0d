#include "exlat/damping.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "exlat/dispersion.hpp"

namespace exlat {

namespace {
constexpr double kSingularBand = 1e-9;     // guard half-width, relative to E_ex
constexpr double kRootResidual = 1e-12;    // eV
constexpr int kMaxBisections = 200;
} // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::superradiant: return "superradiant";
        case Regime::subradiant: return "subradiant";
        case Regime::metastable: return "metastable";
    }
    return "?";
}

double gamma_atom(const PhysicalConstants& consts, double e_a, double mu) {
    // mu^2/eps0 -> 4*pi*coulomb_factor*mu^2
    const double mu2_over_eps0 = 4.0 * std::numbers::pi * consts.coulomb_factor * mu * mu;
    const double hc = consts.hbar_c;
    return mu2_over_eps0 * e_a * e_a * e_a / (3.0 * std::numbers::pi * hc * hc * hc);
}

double rate_orientation_factor(double theta, double phi, double x) {
    const double s = std::sin(theta), c = std::cos(theta), cp = std::cos(phi);
    const double root = std::sqrt(std::max(0.0, 1.0 - x * x));
    const double cross = s * cp * root - c * x;
    return cross * cross + s * s * (1.0 - cp * cp);
}

DecayResult gamma_exciton(const PhysicalConstants& consts, const LatticeConfig& cfg,
                          const DipoleOrientation& dip, double e_ex, double e_0) {
    DecayResult res;
    res.gamma_at = gamma_atom(consts, e_ex, dip.mu);

    if (std::abs(e_0 - e_ex) < kSingularBand * e_ex) {
        res.divergent = true;
        res.gamma = std::numeric_limits<double>::infinity();
        res.ratio = std::numeric_limits<double>::infinity();
        res.regime = Regime::superradiant;
        return res;
    }
    if (e_0 >= e_ex) {
        // beyond the light cone: no free-space photon conserves both
        // momentum and energy
        res.gamma = 0.0;
        res.ratio = 0.0;
        res.regime = Regime::metastable;
        return res;
    }

    const double x = e_0 / e_ex;
    const double mu2_over_eps0 = 4.0 * std::numbers::pi * consts.coulomb_factor * dip.mu * dip.mu;
    const double prefactor = mu2_over_eps0 / (2.0 * cfg.a * cfg.a * consts.hbar_c);
    const double dispersion_factor = e_ex * e_ex / std::sqrt(e_ex * e_ex - e_0 * e_0);
    res.gamma = prefactor * dispersion_factor * rate_orientation_factor(dip.theta, dip.phi, x);
    res.ratio = res.gamma / res.gamma_at;
    res.regime = classify_regime(res);
    return res;
}

Regime classify_regime(const DecayResult& result) {
    if (result.divergent) return Regime::superradiant;
    if (result.gamma == 0.0) return Regime::metastable;
    return result.ratio > 1.0 ? Regime::superradiant : Regime::subradiant;
}

CriticalPoint critical_k(const PhysicalConstants& consts, const LatticeConfig& cfg,
                         double dir_x, double dir_y) {
    const double norm = std::hypot(dir_x, dir_y);
    if (!(norm > 0.0)) throw NoCrossingError("critical_k: zero direction vector");
    dir_x /= norm;
    dir_y /= norm;

    const double band_min = cfg.e_a - 4.0 * std::abs(cfg.j);
    const double band_max = cfg.e_a + 4.0 * std::abs(cfg.j);
    const double k_edge = std::numbers::pi / cfg.a;
    if (!(band_min > 0.0) || !(consts.hbar_c * k_edge > band_max))
        throw NoCrossingError("critical_k: no guaranteed crossing in (0, pi/a] "
                              "(requires E_A - 4|J| > 0 and hbar*c*pi/a > E_A + 4|J|)");

    auto f = [&](double k) {
        return consts.hbar_c * k - exciton_energy(cfg, {k * dir_x, k * dir_y});
    };

    double lo = 0.0, hi = k_edge; // f(0) = -E_ex(0) < 0, f(pi/a) > 0
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < kMaxBisections; ++i) {
        mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::abs(fm) <= kRootResidual) break;
        (fm < 0.0 ? lo : hi) = mid;
        if (hi - lo <= std::numeric_limits<double>::denorm_min()) break;
    }
    return {mid, consts.hbar_c * mid, dir_x, dir_y};
}

} // namespace exlat
