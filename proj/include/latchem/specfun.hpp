#pragma once

namespace latchem {

// Complete elliptic integral of the first kind in the modulus convention,
//   K[m] = int_0^{pi/2} (1 - m^2 sin^2 t)^{-1/2} dt,   |m| < 1.
// Note the m^2 inside the integrand: K[m] here equals K(k=m) of the standard
// modulus convention, not K(parameter m). Evaluated by AGM iteration.
double elliptic_K(double m);

// Modified Bessel functions of the second kind, orders 0 and 1, x > 0.
// Power series below x = 2, continued-fraction evaluation above.
double bessel_K0(double x);
double bessel_K1(double x);

}  // namespace latchem
