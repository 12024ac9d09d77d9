#pragma once

#include <string>
#include <vector>

#include "latchem/lattice.hpp"

namespace latchem {

// Complex amplitude vector over some basis catalog (position grid, momentum
// grid, or a mediator basis catalog). Callers keep it unit-normalized at the
// contract points; normalize() restores the invariant.
struct WaveState {
    std::vector<Complex> amp;
    std::string basis;

    WaveState() = default;
    WaveState(std::size_t dim, std::string tag) : amp(dim), basis(std::move(tag)) {}

    double norm() const;
    void normalize();
};

double norm2(const std::vector<Complex>& v);
Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b);

// Position -> momentum unitary transform on an N^2 state, psi(k) = (1/N) sum_j
// e^{-i k j} psi(j). Round trip with to_position is the identity.
WaveState to_momentum(const WaveState& state, const LatticeSpec& lat);
WaveState to_position(const WaveState& state, const LatticeSpec& lat);

// Diagonal factors e^{-w(k) dt} over the momentum grid (flat-indexed).
std::vector<double> kinetic_exponential_diag(const LatticeSpec& lat, double dt, double t);

}  // namespace latchem
