#include "lstat/special.hpp"

#include <array>
#include <cmath>

#include "lstat/error.hpp"

namespace lstat {

namespace {

double sinc(double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct gk_result {
  double value;
  double error;
};

gk_result gauss_kronrod(double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = sinc(center);
  double kronrod = fc * kronrod_weights[7];
  double gauss = fc * gauss_weights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kronrod_nodes[i];
    const double pair = sinc(center - dx) + sinc(center + dx);
    kronrod += kronrod_weights[i] * pair;
    if (i % 2 == 1) gauss += gauss_weights[i / 2] * pair;
  }
  return {kronrod * half, std::fabs((kronrod - gauss) * half)};
}

double adaptive_sinc_integral(double a, double b, double tolerance, int depth) {
  const gk_result whole = gauss_kronrod(a, b);
  if (whole.error <= tolerance || depth >= 40) return whole.value;
  const double mid = 0.5 * (a + b);
  return adaptive_sinc_integral(a, mid, 0.5 * tolerance, depth + 1) +
         adaptive_sinc_integral(mid, b, 0.5 * tolerance, depth + 1);
}

// Auxiliary functions f, g of Si(x) = pi/2 - f cos x - g sin x, summed up to
// their smallest term.
double sine_integral_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  double f = 0.0, g = 0.0;
  double term_f = 1.0 / x;       // (2k)! / x^{2k+1}
  double term_g = 1.0 / (x * x); // (2k+1)! / x^{2k+2}
  double last_f = INFINITY, last_g = INFINITY;
  for (int k = 0; k < 60; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    if (std::fabs(term_f) < last_f) {
      f += sign * term_f;
      last_f = std::fabs(term_f);
    }
    if (std::fabs(term_g) < last_g) {
      g += sign * term_g;
      last_g = std::fabs(term_g);
    }
    term_f *= (2.0 * k + 1) * (2.0 * k + 2) * inv2;
    term_g *= (2.0 * k + 2) * (2.0 * k + 3) * inv2;
    if (term_f >= last_f && term_g >= last_g) break;
  }
  return pi / 2 - f * std::cos(x) - g * std::sin(x);
}

// Truncated Taylor jet (value, first, second derivative) in s.
struct jet {
  std::complex<double> v, d1, d2;
};

jet operator+(const jet& a, const jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }

jet operator*(const jet& a, const jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

jet operator*(std::complex<double> c, const jet& a) { return {c * a.v, c * a.d1, c * a.d2}; }

jet operator/(const jet& a, const jet& b) {
  const auto q = a.v / b.v;
  const auto q1 = (a.d1 - q * b.d1) / b.v;
  const auto q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}

// n^{-s + shift} for the jet s.
jet power_jet(double n, std::complex<double> s, double shift) {
  const double ln = std::log(n);
  const auto v = std::exp((-s + shift) * ln);
  return {v, -ln * v, ln * ln * v};
}

// B_{2k} / (2k)! for k = 1..12.
constexpr std::array<double, 12> bernoulli_over_factorial = {
    1.0 / 6 / 2,
    -1.0 / 30 / 24,
    1.0 / 42 / 720,
    -1.0 / 30 / 40320,
    5.0 / 66 / 3628800,
    -691.0 / 2730 / 479001600,
    7.0 / 6 / 87178291200.0,
    -3617.0 / 510 / 20922789888000.0,
    43867.0 / 798 / 6402373705728000.0,
    -174611.0 / 330 / 2432902008176640000.0,
    854513.0 / 138 / 1.1240007277776077e21,
    -236364091.0 / 2730 / 6.204484017332394e23};

}  // namespace

double sine_integral(double x) {
  if (x < 0) return -sine_integral(-x);
  if (x == 0) return 0.0;
  if (x > sine_integral_switch) return sine_integral_asymptotic(x);
  return adaptive_sinc_integral(0.0, x, 1e-14, 0);
}

double sine_kernel(double x) {
  if (x == 0.0) return 0.0;
  const double u = pi * x;
  if (std::fabs(u) < 0.5) {
    // Taylor series; the closed form cancels catastrophically near 0.
    const double v = u * u;
    return v * (1.0 / 3 + v * (-2.0 / 45 + v * (1.0 / 315 + v * (-2.0 / 14175 +
           v * (2.0 / 467775 + v * (-4.0 / 42567525))))));
  }
  const double s = std::sin(u) / u;
  return 1.0 - s * s;
}

zeta_jet zeta_with_derivatives(std::complex<double> s) {
  if (std::abs(s - 1.0) < 1e-12) throw domain_error("zeta has a pole at s = 1");
  const int terms = std::max(30, static_cast<int>(std::abs(s)) + 10);
  const jet var{s, 1.0, 0.0};
  jet sum{0.0, 0.0, 0.0};
  for (int n = 1; n < terms; ++n) sum = sum + power_jet(n, s, 0.0);
  const double big_n = terms;
  // N^{1-s} / (s - 1) + N^{-s} / 2
  sum = sum + power_jet(big_n, s, 1.0) / jet{s - 1.0, 1.0, 0.0};
  sum = sum + 0.5 * power_jet(big_n, s, 0.0);
  // sum_k B_{2k}/(2k)! * s (s+1) ... (s+2k-2) * N^{-s-2k+1}
  jet rising{1.0, 0.0, 0.0};
  for (int k = 1; k <= 12; ++k) {
    const int j = 2 * k - 2;  // extend the rising factorial to s ... (s + 2k - 2)
    if (k == 1) {
      rising = var;
    } else {
      rising = rising * jet{s + double(j - 1), 1.0, 0.0} * jet{s + double(j), 1.0, 0.0};
    }
    const jet tail = power_jet(big_n, s, -(2.0 * k - 1));
    sum = sum + std::complex<double>(bernoulli_over_factorial[k - 1]) * (rising * tail);
  }
  return {sum.v, sum.d1, sum.d2};
}

}  // namespace lstat
