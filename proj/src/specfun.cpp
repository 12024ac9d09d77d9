#include "latchem/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "latchem/lattice.hpp"

namespace latchem {

double elliptic_K(double m) {
    if (!(std::abs(m) < 1.0)) throw std::domain_error("elliptic_K: |m| must be < 1");
    // K = pi / (2 AGM(1, sqrt(1 - m^2)))
    double a = 1.0;
    double g = std::sqrt(1.0 - m * m);
    for (int i = 0; i < 60 && std::abs(a - g) > 1e-17 * a; ++i) {
        const double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    return kPi / (2.0 * a);
}

namespace {

// Ascending series for K0, K1 (A&S 9.6.11-9.6.13), accurate for x <= 2.
void bessel_k_series(double x, double& k0, double& k1) {
    const double q = 0.25 * x * x;
    const double lg = std::log(0.5 * x);

    double term0 = 1.0;      // (x^2/4)^k / (k!)^2
    double i0 = 1.0;         // I_0 partial sum
    double s0 = 0.0;         // sum H_k (x^2/4)^k / (k!)^2
    double term1 = 1.0;      // (x^2/4)^k / (k! (k+1)!)
    double i1 = 1.0;         // I_1 / (x/2) partial sum
    double s1 = term1;       // sum [psi(k+1)+psi(k+2)+2g] style accumulator, below
    double hk = 0.0;         // harmonic number H_k
    double psum = 1.0;       // H_k + H_{k+1}

    for (int k = 1; k < 64; ++k) {
        term0 *= q / (double(k) * k);
        i0 += term0;
        hk += 1.0 / k;
        s0 += term0 * hk;
        term1 *= q / (double(k) * (k + 1));
        i1 += term1;
        psum = 2.0 * hk + 1.0 / (k + 1);  // H_k + H_{k+1}
        s1 += term1 * psum;
        if (term0 < 1e-18 * i0 && term1 < 1e-18 * i1) break;
    }
    i1 *= 0.5 * x;
    k0 = -(lg + kEulerGamma) * i0 + s0;
    // K1 = 1/x + log(x/2) I1(x) - (x/4) sum [psi(k+1)+psi(k+2)] q^k/(k!(k+1)!)
    //    with psi(k+1) = -gamma + H_k.
    k1 = 1.0 / x + lg * i1 - 0.25 * x * (s1 - 2.0 * kEulerGamma * (i1 / (0.5 * x)));
}

// Steed/Temme continued fraction CF2 for x >= 2 (order 0 and 1).
void bessel_k_cf2(double x, double& k0, double& k1) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double a1 = 0.25;  // 1/4 - nu^2 with nu = 0
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d;
    double h = delh;
    double q1 = 0.0, q2 = 1.0;
    double c = a1, q = c;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < 12000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) <= eps) break;
    }
    h = a1 * h;
    k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    k1 = k0 * (x + 0.5 - h) / x;
}

}  // namespace

double bessel_K0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_K0: x must be > 0");
    double k0, k1;
    if (x <= 2.0)
        bessel_k_series(x, k0, k1);
    else
        bessel_k_cf2(x, k0, k1);
    return k0;
}

double bessel_K1(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_K1: x must be > 0");
    double k0, k1;
    if (x <= 2.0)
        bessel_k_series(x, k0, k1);
    else
        bessel_k_cf2(x, k0, k1);
    return k1;
}

}  // namespace latchem
