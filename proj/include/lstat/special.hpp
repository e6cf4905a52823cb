#pragma once

#include <complex>

namespace lstat {

inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double pi = 3.14159265358979323846;

/// Si(x) = integral_0^x sin(t)/t dt, absolute error below 1e-10.
/// Adaptive Gauss-Kronrod for |x| <= sine_integral_switch, asymptotic
/// expansion beyond.
double sine_integral(double x);
inline constexpr double sine_integral_switch = 24.0;

/// 1 - (sin(pi x) / (pi x))^2, with the removable point x = 0 mapped to 0.
double sine_kernel(double x);

/// zeta(s), zeta'(s), zeta''(s) by Euler-Maclaurin summation, s != 1.
struct zeta_jet {
  std::complex<double> value;
  std::complex<double> d1;
  std::complex<double> d2;
};

zeta_jet zeta_with_derivatives(std::complex<double> s);

}  // namespace lstat
