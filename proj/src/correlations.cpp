#include "lstat/correlations.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "lstat/arith.hpp"
#include "lstat/error.hpp"
#include "lstat/kahan.hpp"
#include "lstat/kernels.hpp"
#include "lstat/special.hpp"

namespace lstat {

namespace {

double twin_constant(std::span<const std::uint32_t> primes) {
  // The product is accumulated in log space to keep rounding independent of
  // the number of factors.
  compensated_sum log_product;
  for (const std::uint32_t p : primes) {
    if (p == 2) continue;
    const double q = static_cast<double>(p) - 1.0;
    log_product += std::log1p(-1.0 / (q * q));
  }
  return 2.0 * std::exp(log_product.value());
}

double local_factor(std::int64_t r) {
  double factor = 1.0;
  std::int64_t m = r < 0 ? -r : r;
  while (m % 2 == 0) m /= 2;
  for (std::int64_t q = 3; q * q <= m; q += 2) {
    if (m % q != 0) continue;
    factor *= static_cast<double>(q - 1) / static_cast<double>(q - 2);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factor *= static_cast<double>(m - 1) / static_cast<double>(m - 2);
  return factor;
}

}  // namespace

CorrelationSeries correlation_scan(const VonMangoldtTable& table, std::int64_t r, std::int64_t n,
                                   std::int64_t step) {
  if (r < 0) throw invalid_argument_error("correlation shift r must be >= 0");
  if (n < 1 || step < 1) throw invalid_argument_error("correlation_scan needs n >= 1 and step >= 1");
  if (n + r > table.limit()) {
    throw capacity_error("correlation needs Lambda up to " + std::to_string(n + r) +
                         ", table stops at " + std::to_string(table.limit()));
  }
  const std::int64_t blocks = (n + step - 1) / step;
  std::vector<double> block_sums(static_cast<std::size_t>(blocks));
  kernels::shifted_product_block_sums(table.values(), r, n, step, block_sums);

  CorrelationSeries series{table.spec(), r, {}, std::nullopt};
  compensated_sum running;
  for (std::int64_t j = 0; j < blocks; ++j) {
    running += block_sums[j];
    const std::int64_t upto = std::min(n, (j + 1) * step);
    series.checkpoints.push_back({upto, running.value() / static_cast<double>(upto)});
  }
  if (table.spec().degree() == 1 && r != 0) series.hl_reference = singular_series(r).value;
  return series;
}

SingularSeries singular_series(std::int64_t r, std::int64_t prime_cutoff) {
  if (r == 0) throw invalid_argument_error("singular series is defined for r != 0");
  if (prime_cutoff < 3) throw invalid_argument_error("prime cutoff must be >= 3");
  SingularSeries out{r, prime_cutoff, 0.0, 0.0, 0.0};
  out.twin_constant = twin_constant(primes_up_to(prime_cutoff));
  // Omitted factors satisfy 1 >= prod_{p > c} (1 - (p-1)^{-2}) >= 1 - 1/(c - 1).
  const double relative_tail = 1.0 / static_cast<double>(prime_cutoff - 1);
  out.tail_bound = out.twin_constant * relative_tail;
  if (r % 2 != 0) {
    out.tail_bound = 0.0;
    return out;
  }
  out.value = out.twin_constant * local_factor(r);
  out.tail_bound = out.value * relative_tail;
  return out;
}

double averaged_hl_asymptotic(std::int64_t r) {
  const std::int64_t a = r < 0 ? -r : r;
  if (a < 2) throw invalid_argument_error("averaged Hardy-Littlewood form needs |r| >= 2");
  return 1.0 - std::log(static_cast<double>(a)) / (2.0 * static_cast<double>(a));
}

double singular_series_window_average(std::int64_t r, std::int64_t prime_cutoff) {
  const std::int64_t a = r < 0 ? -r : r;
  if (a < 1) throw invalid_argument_error("window average needs |r| >= 1");
  const double twin = singular_series(2, prime_cutoff).twin_constant;
  compensated_sum total;
  for (std::int64_t R = 2; R <= a; R += 2) total += 2.0 * twin * local_factor(R);  // +R and -R
  return total.value() / (2.0 * static_cast<double>(a));
}

double smoothed_correlation_asymptotic(const LFunctionSpec& spec, double r) {
  if (r == 0.0) throw invalid_argument_error("smoothed correlation asymptotic needs r != 0");
  return -spec.degree() * sine_integral(r) / (pi * r);
}

}  // namespace lstat
