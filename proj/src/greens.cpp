#include "latchem/greens.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "latchem/specfun.hpp"

namespace latchem {

namespace {

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double sigma0_analytic(double z) {
    if (!(z > 4.0)) throw std::domain_error("sigma0_analytic: z must lie above the band (z > 4)");
    return 2.0 * elliptic_K(4.0 / z) / (kPi * z);
}

double sigma0_band_edge(double delta) {
    if (!(delta > 0.0)) throw std::domain_error("sigma0_band_edge: delta must be > 0");
    return (5.0 * std::log(2.0) - std::log(delta)) / (4.0 * kPi);
}

double sigma0_lattice_sum(double z, const LatticeSpec& lat, double t) {
    const int N = lat.N;
    std::vector<double> c(N);
    for (int m = 0; m < N; ++m) c[m] = std::cos(lat.momentum(m));
    Kahan acc;
    for (int mx = 0; mx < N; ++mx) {
        for (int my = 0; my < N; ++my) {
            const double w = -2.0 * t * (c[mx] + c[my]);
            const double den = z - w;
            if (std::abs(den) < 1e-12)
                throw std::domain_error("sigma0_lattice_sum: z collides with a grid energy");
            acc.add(1.0 / den);
        }
    }
    return acc.sum / (double(N) * N);
}

Complex sigma_d_analytic(double z, int dx, int dy) {
    if (!(z > 4.0)) throw std::domain_error("sigma_d_analytic: z must lie above the band");
    const double d = std::hypot(double(dx), double(dy));
    if (d == 0.0) throw std::domain_error("sigma_d_analytic: d = 0, use sigma0 instead");
    const double mag = bessel_K0(d * std::sqrt(z - 4.0)) / (2.0 * kPi);
    const double sign = ((dx + dy) % 2 == 0) ? 1.0 : -1.0;  // e^{i pi (dx+dy)}
    return {sign * mag, 0.0};
}

Complex sigma_d_lattice_sum(double z, int dx, int dy, const LatticeSpec& lat, double t) {
    const int N = lat.N;
    std::vector<double> c(N), kx(N);
    for (int m = 0; m < N; ++m) {
        kx[m] = lat.momentum(m);
        c[m] = std::cos(kx[m]);
    }
    Kahan re, im;
    for (int mx = 0; mx < N; ++mx) {
        const double px = kx[mx] * dx;
        for (int my = 0; my < N; ++my) {
            const double w = -2.0 * t * (c[mx] + c[my]);
            const double den = z - w;
            if (std::abs(den) < 1e-12)
                throw std::domain_error("sigma_d_lattice_sum: z collides with a grid energy");
            const double phase = px + kx[my] * dy;
            re.add(std::cos(phase) / den);
            im.add(std::sin(phase) / den);
        }
    }
    const double inv = 1.0 / (double(N) * N);
    return {re.sum * inv, im.sum * inv};
}

double pair_bound_lhs(double E, int dx, int dy, const LatticeSpec& lat, double t) {
    // Written with the band-shifted variable k~ = k - (pi,pi); substituting back
    // gives numerator 1 + s cos(k d) with s the parity sign of dx+dy, so the
    // expression picks the channel that binds above the band for either parity.
    const int N = lat.N;
    const double s = ((dx + dy) % 2 == 0) ? 1.0 : -1.0;
    std::vector<double> c(N), kx(N);
    for (int m = 0; m < N; ++m) {
        kx[m] = lat.momentum(m);
        c[m] = std::cos(kx[m]);
    }
    Kahan acc;
    for (int mx = 0; mx < N; ++mx) {
        const double px = kx[mx] * dx;
        for (int my = 0; my < N; ++my) {
            const double w = -2.0 * t * (c[mx] + c[my]);
            const double den = E - w;
            if (std::abs(den) < 1e-12)
                throw std::domain_error("pair_bound_lhs: E collides with a grid energy");
            acc.add((1.0 + s * std::cos(px + kx[my] * dy)) / den);
        }
    }
    return acc.sum / (double(N) * N);
}

}  // namespace latchem
