#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace latchem {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
// Euler-Mascheroni constant
inline constexpr double kEulerGamma = 0.57721566490153286061;

enum class Boundary { open, periodic };

struct SiteIndex {
    int x = 0;
    int y = 0;
    bool operator==(const SiteIndex&) const = default;
};

// Square N x N lattice with unit spacing. Sites are flattened as k = x*N + y.
struct LatticeSpec {
    int N = 2;
    Boundary boundary = Boundary::open;

    LatticeSpec() = default;
    LatticeSpec(int n, Boundary b) : N(n), boundary(b) {
        if (N < 2) throw std::invalid_argument("LatticeSpec: N must be >= 2");
    }

    int sites() const { return N * N; }

    int flatten(SiteIndex s) const { return s.x * N + s.y; }
    int flatten(int x, int y) const { return x * N + y; }
    SiteIndex unflatten(int k) const { return {k / N, k % N}; }

    bool contains(double x, double y) const {
        return x >= 0 && x < N && y >= 0 && y < N;
    }

    // Momentum component for grid line m = 0..N-1 (radians per lattice spacing).
    double momentum(int m) const { return 2.0 * kPi * m / N; }

    // Nearest neighbors of flat site k under the boundary rule (up to 4).
    inline int neighbors(int k, int out[4]) const {
        const int x = k / N, y = k % N;
        int cnt = 0;
        if (boundary == Boundary::periodic) {
            out[cnt++] = flatten((x + 1) % N, y);
            out[cnt++] = flatten((x + N - 1) % N, y);
            out[cnt++] = flatten(x, (y + 1) % N);
            out[cnt++] = flatten(x, (y + N - 1) % N);
        } else {
            if (x + 1 < N) out[cnt++] = flatten(x + 1, y);
            if (x > 0) out[cnt++] = flatten(x - 1, y);
            if (y + 1 < N) out[cnt++] = flatten(x, y + 1);
            if (y > 0) out[cnt++] = flatten(x, y - 1);
        }
        return cnt;
    }

    // Minimal-image separation between two flat sites (integer components).
    std::pair<int, int> separation(int ka, int kb) const {
        int dx = ka / N - kb / N;
        int dy = ka % N - kb % N;
        if (boundary == Boundary::periodic) {
            auto wrap = [this](int d) {
                d %= N;
                if (d > N / 2) d -= N;
                if (d < -N / 2) d += N;
                return d;
            };
            dx = wrap(dx);
            dy = wrap(dy);
        }
        return {dx, dy};
    }

    double distance(int ka, int kb) const {
        auto [dx, dy] = separation(ka, kb);
        return std::hypot(double(dx), double(dy));
    }
};

// Tight-binding dispersion of the square lattice, w(k) = -2t(cos kx + cos ky).
// Band spans [-4t, 4t].
inline double dispersion(double kx, double ky, double t) {
    return -2.0 * t * (std::cos(kx) + std::cos(ky));
}

// Dispersion table over the full momentum grid, flat-indexed like sites.
inline std::vector<double> dispersion_grid(const LatticeSpec& lat, double t) {
    std::vector<double> w(lat.sites());
    for (int mx = 0; mx < lat.N; ++mx) {
        const double cx = std::cos(lat.momentum(mx));
        for (int my = 0; my < lat.N; ++my)
            w[lat.flatten(mx, my)] = -2.0 * t * (cx + std::cos(lat.momentum(my)));
    }
    return w;
}

}  // namespace latchem
