#include "exlat/dispersion.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace exlat {

WaveVector2D WaveVector2D::from_polar(double magnitude, double direction_angle) {
    return {magnitude * std::cos(direction_angle), magnitude * std::sin(direction_angle)};
}

double WaveVector2D::magnitude() const { return std::hypot(kx, ky); }

double exciton_energy(const LatticeConfig& cfg, WaveVector2D k) {
    return cfg.e_a - 2.0 * cfg.j * (std::cos(k.kx * cfg.a) + std::cos(k.ky * cfg.a));
}

double general_dispersion(const LatticeConfig& cfg, std::span<const Coupling> couplings, WaveVector2D k) {
    // Symmetry precondition: every (R, J) needs a partner (-R, J).
    for (const auto& c : couplings) {
        bool found = false;
        for (const auto& d : couplings) {
            if (std::abs(d.rx + c.rx) <= 1e-9 && std::abs(d.ry + c.ry) <= 1e-9 &&
                std::abs(d.j - c.j) <= 1e-12 * (std::abs(c.j) + 1e-300)) {
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("general_dispersion: coupling list is not symmetric under R -> -R");
    }

    std::complex<double> sum = 0.0;
    for (const auto& c : couplings) {
        double phase = k.kx * c.rx + k.ky * c.ry;
        sum += c.j * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    if (std::abs(sum.imag()) > 1e-12 * (std::abs(sum.real()) + cfg.e_a))
        throw std::invalid_argument("general_dispersion: residual imaginary part in lattice sum");
    return cfg.e_a + sum.real();
}

WaveVector2D fold_to_bz(const LatticeConfig& cfg, WaveVector2D k) {
    const double g = 2.0 * std::numbers::pi / cfg.a;
    auto fold1 = [g](double x) {
        // representative in (-g/2, g/2]
        double f = x - g * std::round(x / g);
        if (f <= -g / 2.0) f += g;
        if (f > g / 2.0) f -= g;
        return f;
    };
    return {fold1(k.kx), fold1(k.ky)};
}

std::vector<WaveVector2D> bz_grid(const LatticeConfig& cfg) {
    auto axis = [&](int n) {
        std::vector<double> vals;
        vals.reserve(static_cast<std::size_t>(n));
        const double step = 2.0 * std::numbers::pi / (n * cfg.a);
        // m in (-n/2, n/2]: for even n the +pi/a endpoint is kept, -pi/a folded
        const int m_lo = -(n - 1) / 2;
        const int m_hi = n / 2;
        for (int m = m_lo; m <= m_hi; ++m) vals.push_back(m * step);
        return vals;
    };
    const auto xs = axis(cfg.n_x);
    const auto ys = axis(cfg.n_y);
    std::vector<WaveVector2D> grid;
    grid.reserve(xs.size() * ys.size());
    for (double ky : ys)
        for (double kx : xs) grid.push_back({kx, ky});
    return grid;
}

BandPoint band_point(const PhysicalConstants& consts, const LatticeConfig& cfg, WaveVector2D k) {
    return {k, exciton_energy(cfg, k), consts.hbar_c * k.magnitude()};
}

} // namespace exlat
