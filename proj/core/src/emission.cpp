#include "exlat/emission.hpp"

#include <cmath>
#include <numbers>

namespace exlat {

double intensity_orientation_factor(double theta, double phi, double e_ex, double e_0) {
    const double s = std::sin(theta), c = std::cos(theta), cp = std::cos(phi);
    const double r2 = (e_ex * e_ex) / (e_0 * e_0);
    const double diff = (e_0 * e_0 - e_ex * e_ex);
    return c * c + s * s * (r2 + cp * cp * diff / (e_ex * e_ex)) +
           2.0 * s * c * cp * diff / (e_ex * e_0);
}

FieldEnvelope field_envelope(const PhysicalConstants& consts, const LatticeConfig& cfg,
                             const DipoleOrientation& dip, double e_ex, double e_0) {
    if (!(e_0 > 0.0))
        throw std::invalid_argument("field_envelope: E_0 must be > 0 (k_hat frame undefined at k = 0)");

    FieldEnvelope env;
    const double k = e_0 / consts.hbar_c;
    env.phase_wavevector = k;
    env.long_wavelength_ok = (k * cfg.a <= 0.1);

    const double mu_par = dip.mu_parallel();
    const double mu_z = dip.mu_z();
    const double cp = std::cos(dip.phi), sp = std::sin(dip.phi);
    const double r = e_ex / e_0;
    env.components = {(r - 1.0 / r) * mu_par * cp - mu_z, r * mu_par * sp, -mu_par * cp};

    const double n = static_cast<double>(cfg.site_count());
    env.prefactor = e_0 * std::sqrt(4.0 * std::numbers::pi * consts.coulomb_factor) /
                    (2.0 * consts.hbar_c * cfg.a * cfg.a * std::sqrt(n));
    return env;
}

double exciton_population(const PhysicalConstants& consts, double initial, double gamma_ev,
                          double t_seconds, double z_angstrom) {
    const double t_ret = t_seconds - z_angstrom / consts.speed_of_light();
    if (t_ret <= 0.0) return initial;
    return initial * std::exp(-consts.rate_to_inverse_seconds(gamma_ev) * t_ret);
}

EmissionSample emission_intensity(const PhysicalConstants& consts, const LatticeConfig& cfg,
                                  const DipoleOrientation& dip, double e_ex, double e_0,
                                  double gamma_ev, std::size_t n_sites, double t_seconds,
                                  double z_angstrom) {
    if (!(e_0 > 0.0))
        throw std::invalid_argument("emission_intensity: E_0 must be > 0");
    if (n_sites < 1)
        throw std::invalid_argument("emission_intensity: N must be >= 1");

    EmissionSample sample;
    sample.z = z_angstrom;
    sample.t = t_seconds;
    sample.long_wavelength_ok = (e_0 * cfg.a / consts.hbar_c <= 0.1);
    sample.retarded = (t_seconds >= z_angstrom / consts.speed_of_light());
    if (!sample.retarded) {
        sample.intensity = 0.0;
        return sample;
    }

    const double mu2_over_eps0 = 4.0 * std::numbers::pi * consts.coulomb_factor * dip.mu * dip.mu;
    const double denom = 2.0 * consts.hbar_c * cfg.a * cfg.a;
    const double prefactor = e_0 * e_0 * mu2_over_eps0 /
                             (denom * denom * static_cast<double>(n_sites));
    sample.intensity = prefactor * intensity_orientation_factor(dip.theta, dip.phi, e_ex, e_0) *
                       exciton_population(consts, 1.0, gamma_ev, t_seconds, z_angstrom);
    return sample;
}

} // namespace exlat
