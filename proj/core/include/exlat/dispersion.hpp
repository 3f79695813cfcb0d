// dispersion.hpp — exciton band structure over the first Brillouin zone of
// the square lattice.

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "exlat/config.hpp"
#include "exlat/constants.hpp"

namespace exlat {

struct WaveVector2D {
    double kx = 0.0; // 1/Angstrom
    double ky = 0.0;

    static WaveVector2D from_polar(double magnitude, double direction_angle);
    double magnitude() const;
};

struct BandPoint {
    WaveVector2D k;
    double energy;       // E_ex(k), eV
    double photon_line;  // E_0(k) = hbar*c*|k|, eV
};

// One inter-site coupling term J(R) at lattice offset R.
struct Coupling {
    double rx = 0.0; // Angstrom
    double ry = 0.0;
    double j = 0.0;  // eV
};

// Nearest-neighbor band: E_A - 2J[cos(kx a) + cos(ky a)].
double exciton_energy(const LatticeConfig& cfg, WaveVector2D k);

// General lattice Fourier sum E_A + sum_R J(R) e^{i k.R}. The coupling list
// must be closed under R -> -R with equal J; otherwise the energy would be
// complex and std::invalid_argument is thrown. The nearest-neighbor band
// above corresponds to J(+-a x) = J(+-a y) = -J.
double general_dispersion(const LatticeConfig& cfg, std::span<const Coupling> couplings, WaveVector2D k);

// Folds k into the half-open zone (-pi/a, pi/a]^2.
WaveVector2D fold_to_bz(const LatticeConfig& cfg, WaveVector2D k);

// The N_x*N_y allowed wavevectors k_i = 2*pi/(N_i a) * m, with the
// half-integer endpoint counted once (m in (-N_i/2, N_i/2]). Row-major:
// kx varies fastest, both axes in ascending order.
std::vector<WaveVector2D> bz_grid(const LatticeConfig& cfg);

BandPoint band_point(const PhysicalConstants& consts, const LatticeConfig& cfg, WaveVector2D k);

} // namespace exlat
