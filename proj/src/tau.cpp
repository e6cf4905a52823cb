#include <string>
#include <vector>

#include "lstat/arith.hpp"
#include "lstat/error.hpp"
#include "lstat/kernels.hpp"
#include "lstat/lfunc.hpp"

namespace lstat {

namespace {

// prod_{n>=1} (1 - q^n)^3 = sum_{k>=0} (-1)^k (2k + 1) q^{k(k+1)/2}, terms below q^length.
std::vector<sparse_term> jacobi_cube(std::int64_t length) {
  std::vector<sparse_term> terms;
  for (std::int64_t k = 0; k * (k + 1) / 2 < length; ++k) {
    terms.push_back({k * (k + 1) / 2, (k % 2 == 0 ? 1 : -1) * (2 * k + 1)});
  }
  return terms;
}

}  // namespace

std::vector<int128> tau_series(std::int64_t limit) {
  if (limit < 1) throw invalid_argument_error("tau_series: limit must be >= 1");
  if (limit > tau_limit_max) {
    throw capacity_error("tau_series: limit " + std::to_string(limit) + " exceeds " +
                         std::to_string(tau_limit_max) +
                         ", beyond which 128-bit coefficients are not guaranteed");
  }
  // Delta = q * (prod (1 - q^n)^3)^8; tau(n) is the q^{n-1} coefficient of the power.
  const std::int64_t length = limit;
  const auto sparse = jacobi_cube(length);
  std::vector<int128> power(static_cast<std::size_t>(length), 0);
  for (const auto& term : sparse) power[term.exponent] = term.coefficient;
  std::vector<int128> next(power.size());
  for (int i = 1; i < 8; ++i) {
    kernels::sparse_dense_multiply(power, sparse, next);
    power.swap(next);
  }
  std::vector<int128> tau(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t n = 1; n <= limit; ++n) tau[n] = power[n - 1];
  return tau;
}

PrimeCoefficients tau_coefficients(std::int64_t limit) {
  if (limit < 2) throw invalid_argument_error("tau_coefficients: limit must be >= 2");
  const auto tau = tau_series(limit);
  auto primes = primes_up_to(limit);
  std::vector<int128> raw;
  raw.reserve(primes.size());
  for (const std::uint32_t p : primes) raw.push_back(tau[p]);
  return make_coefficients(LFunctionKind::ramanujan_tau, limit, 1, std::nullopt,
                           std::move(primes), std::move(raw));
}

}  // namespace lstat
