#pragma once

#include <complex>

#include "latchem/lattice.hpp"

namespace latchem {

// Energy point relative to the upper band edge at +4t (t = 1 internal units).
struct BandPoint {
    double z = 0.0;
    double delta = 0.0;  // z - 4
    explicit BandPoint(double z_) : z(z_), delta(z_ - 4.0) {}
};

// Continuum Brillouin-zone integral Sigma(z,0) = 2 K[4/z] / (pi z) for z > 4.
double sigma0_analytic(double z);

// Band-edge expansion Sigma(4+delta,0) ~ (5 log 2 - log delta) / (4 pi).
double sigma0_band_edge(double delta);

// Finite-lattice sum Sigma(z,0) = (1/N^2) sum_k 1/(z - w_k), exact for the
// N x N momentum grid.  Deterministic row-major Kahan accumulation.
// Throws if z collides with a grid energy within 1e-12.
double sigma0_lattice_sum(double z, const LatticeSpec& lat, double t = 1.0);

// Continuum Sigma(z,d) = e^{i pi.d} K0[|d| sqrt(z-4)] / (2 pi), z > 4, d != 0.
Complex sigma_d_analytic(double z, int dx, int dy);

// Finite-lattice sum Sigma(z,d) = (1/N^2) sum_k e^{i k d} / (z - w_k).
Complex sigma_d_lattice_sum(double z, int dx, int dy, const LatticeSpec& lat,
                            double t = 1.0);

// Left-hand side of the two-fermion bound-state condition,
//   (1/N^2) sum_k (1 + e^{i k d}) / (E - w_{k~}),   k~ = k - (pi,pi),
// which is real for integer d.  Used to root-solve the upper bound state.
double pair_bound_lhs(double E, int dx, int dy, const LatticeSpec& lat, double t = 1.0);

}  // namespace latchem
