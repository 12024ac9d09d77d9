#include "latchem/wavestate.hpp"

#include <cmath>
#include <stdexcept>

#include "latchem/fft.hpp"

namespace latchem {

double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return s;
}

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double WaveState::norm() const { return std::sqrt(norm2(amp)); }

void WaveState::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::runtime_error("WaveState: cannot normalize zero state");
    for (auto& a : amp) a /= n;
}

namespace {
WaveState transformed(const WaveState& state, const LatticeSpec& lat, bool forward,
                      const char* tag) {
    if (int(state.amp.size()) != lat.sites())
        throw std::invalid_argument("to_momentum/to_position: state dimension mismatch");
    WaveState out = state;
    TensorTransform plan(lat.N, 1, out.amp.data());
    if (forward)
        plan.forward();
    else
        plan.inverse();
    out.basis = tag;
    return out;
}
}  // namespace

WaveState to_momentum(const WaveState& state, const LatticeSpec& lat) {
    return transformed(state, lat, true, "momentum");
}

WaveState to_position(const WaveState& state, const LatticeSpec& lat) {
    return transformed(state, lat, false, "position");
}

std::vector<double> kinetic_exponential_diag(const LatticeSpec& lat, double dt, double t) {
    auto w = dispersion_grid(lat, t);
    for (auto& x : w) x = std::exp(-x * dt);
    return w;
}

}  // namespace latchem
