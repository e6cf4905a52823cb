#pragma once
// Slow, obviously-correct reference computations shared by the unit tests.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// log p if n = p^k by trial division, else 0.
inline double von_mangoldt(std::int64_t n) {
  if (n < 2) return 0.0;
  std::int64_t p = 2;
  while (n % p != 0) ++p;
  std::int64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

inline int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

inline std::int64_t totient_by_gcd(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

/// sum over l mod n, (l, n) = 1, of cos(2 pi l r / n), rounded.
inline std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n) {
  double total = 0.0;
  for (std::int64_t l = 1; l <= n; ++l) {
    if (std::gcd(l, n) != 1) continue;
    const std::int64_t k = (l % n) * (((r % n) + n) % n) % n;
    total += std::cos(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
  }
  return std::llround(total);
}

/// Same exponential sum for several r at once, sharing one cosine table.
inline std::vector<std::int64_t> ramanujan_sums(const std::vector<std::int64_t>& rs, std::int64_t n) {
  std::vector<double> cosine(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) cosine[k] = std::cos(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
  std::vector<char> coprime(static_cast<std::size_t>(n) + 1, 1);
  const auto strike = [&](std::int64_t p) {
    for (std::int64_t l = p; l <= n; l += p) coprime[l] = 0;
  };
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    strike(p);
  }
  if (m > 1) strike(m);
  std::vector<std::int64_t> out;
  for (const std::int64_t r : rs) {
    const std::int64_t rr = ((r % n) + n) % n;
    double total = 0.0;
    for (std::int64_t l = 1; l <= n; ++l) {
      if (coprime[l]) total += cosine[(l % n) * rr % n];
    }
    out.push_back(std::llround(total));
  }
  return out;
}

inline std::int64_t modpow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Projective points (including singular ones) on the long Weierstrass
/// model over F_p, by trying every (x, y).
inline std::int64_t count_points(const std::int64_t a[5], std::int64_t p) {
  auto md = [p](std::int64_t v) { return ((v % p) + p) % p; };
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      const std::int64_t lhs = md(y * y + md(a[0] * x) * y + a[2] * y);
      const std::int64_t rhs = md(md(md(x * x) * x) + md(a[1] * md(x * x)) + md(a[3] * x) + a[4]);
      count += lhs == rhs;
    }
  }
  return count;
}

/// a_p = -sum_x (D(x) / p) with D the discriminant in y of the long form,
/// Legendre symbols by Euler's criterion. Odd p of good reduction.
inline std::int64_t legendre_trace(const std::int64_t a[5], std::int64_t p) {
  auto md = [p](std::int64_t v) { return ((v % p) + p) % p; };
  std::int64_t total = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t lin = md(a[0] * x + a[2]);
    const std::int64_t cubic = md(md(md(x * x) * x) + md(a[1] * md(x * x)) + md(a[3] * x) + a[4]);
    const std::int64_t d = md(lin * lin + 4 * cubic);
    if (d == 0) continue;
    total += modpow(d, (p - 1) / 2, p) == 1 ? 1 : -1;
  }
  return -total;
}

}  // namespace oracle
