#include "lstat/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lstat/error.hpp"
#include "lstat/kahan.hpp"

namespace lstat {

namespace {

void check_in_table(std::int64_t n, const PrimeTable& pt, const char* what) {
  if (n < 1) throw invalid_argument_error(std::string(what) + ": n must be >= 1");
  if (n > pt.limit()) {
    throw capacity_error(std::string(what) + ": n=" + std::to_string(n) +
                         " beyond the sieve limit " + std::to_string(pt.limit()));
  }
}

}  // namespace

std::vector<std::pair<std::uint32_t, int>> PrimeTable::factorize(std::int64_t n) const {
  std::vector<std::pair<std::uint32_t, int>> out;
  while (n > 1) {
    const std::uint32_t p = smallest_factor(n);
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

PrimeTable sieve(std::int64_t limit) {
  if (limit < 2 || limit > (std::int64_t{1} << 31)) {
    throw invalid_argument_error("sieve: limit must lie in [2, 2^31], got " +
                                 std::to_string(limit));
  }
  PrimeTable pt;
  pt.limit_ = limit;
  pt.smallest_factor_.assign(static_cast<std::size_t>(limit) + 1, 0);
  auto& lpf = pt.smallest_factor_;
  auto& primes = pt.primes_;
  primes.reserve(static_cast<std::size_t>(1.26 * limit / std::log(static_cast<double>(limit))) + 16);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (lpf[i] == 0) {
      lpf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t li = lpf[i];
    for (const std::uint32_t p : primes) {
      const std::int64_t m = static_cast<std::int64_t>(p) * i;
      if (p > li || m > limit) break;
      lpf[m] = p;
    }
  }
  return pt;
}

std::vector<std::uint32_t> primes_up_to(std::int64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit > (std::int64_t{1} << 32)) {
    throw invalid_argument_error("primes_up_to: limit must not exceed 2^32");
  }
  if (limit < 2) return out;
  const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<char> small(static_cast<std::size_t>(root) + 1, 1);
  std::vector<std::int64_t> base;
  for (std::int64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::int64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  constexpr std::int64_t segment = 1 << 18;
  std::vector<char> mark(segment);
  for (std::int64_t low = 2; low <= limit; low += segment) {
    const std::int64_t high = std::min(low + segment - 1, limit);
    std::fill(mark.begin(), mark.end(), 1);
    for (const std::int64_t p : base) {
      if (p * p > high) break;
      std::int64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::int64_t j = start; j <= high; j += p) mark[j - low] = 0;
    }
    for (std::int64_t n = low; n <= high; ++n) {
      if (mark[n - low]) out.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return out;
}

ClassicalLambda classical_lambda(const PrimeTable& pt) {
  const auto size = static_cast<std::size_t>(pt.limit()) + 1;
  ClassicalLambda out;
  out.values.assign(size, 0.0);
  out.prefix.assign(size, 0.0);
  for (const std::uint32_t p : pt.primes()) {
    const double lp = std::log(static_cast<double>(p));
    for (std::int64_t q = p; q <= pt.limit(); q *= p) out.values[q] = lp;
  }
  compensated_sum acc;
  for (std::size_t n = 1; n < size; ++n) {
    acc += out.values[n];
    out.prefix[n] = acc.value();
  }
  return out;
}

int moebius(std::int64_t n, const PrimeTable& pt) {
  check_in_table(n, pt, "moebius");
  int sign = 1;
  while (n > 1) {
    const std::uint32_t p = pt.smallest_factor(n);
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t totient(std::int64_t n, const PrimeTable& pt) {
  check_in_table(n, pt, "totient");
  std::int64_t phi = n;
  for (const auto& [p, e] : pt.factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n, const PrimeTable& pt) {
  check_in_table(n, pt, "ramanujan_sum");
  const std::int64_t g = std::gcd(r < 0 ? -r : r, n);
  // Walk the divisors d of g; each contributes d * mu(n / d).
  const auto factors = pt.factorize(g);
  std::int64_t total = 0;
  std::vector<std::int64_t> divisors{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divisors.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  for (const std::int64_t d : divisors) total += d * moebius(n / d, pt);
  return total;
}

}  // namespace lstat
