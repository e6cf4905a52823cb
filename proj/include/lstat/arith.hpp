#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lstat {

/// Primes up to an inclusive limit together with the least prime factor of
/// every integer in [2, limit]. Immutable once built.
class PrimeTable {
 public:
  std::int64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }

  /// Least prime factor of n, 2 <= n <= limit.
  std::uint32_t smallest_factor(std::int64_t n) const {
    return smallest_factor_[static_cast<std::size_t>(n)];
  }

  bool is_prime(std::int64_t n) const {
    return n >= 2 && n <= limit_ && smallest_factor(n) == static_cast<std::uint32_t>(n);
  }

  /// (prime, exponent) pairs of n in increasing prime order, 1 <= n <= limit.
  std::vector<std::pair<std::uint32_t, int>> factorize(std::int64_t n) const;

 private:
  friend PrimeTable sieve(std::int64_t limit);

  std::int64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> smallest_factor_;
};

/// Linear sieve. Throws invalid_argument_error unless 2 <= limit <= 2^31.
PrimeTable sieve(std::int64_t limit);

/// Primes <= limit from a segmented sieve; no factor table is kept, so this
/// is the memory-light path for very large von Mangoldt tables.
std::vector<std::uint32_t> primes_up_to(std::int64_t limit);

/// values[n] = log p if n = p^k, else 0 (values[0] is unused). prefix[n] is
/// the compensated running sum of values[1..n].
struct ClassicalLambda {
  std::vector<double> values;
  std::vector<double> prefix;
};

ClassicalLambda classical_lambda(const PrimeTable& pt);

int moebius(std::int64_t n, const PrimeTable& pt);

std::int64_t totient(std::int64_t n, const PrimeTable& pt);

/// Ramanujan's sum c(r, n) through sum_{d | (r, n)} d * mu(n / d).
std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n, const PrimeTable& pt);

}  // namespace lstat
