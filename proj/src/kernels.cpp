#include "lstat/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <omp.h>

#include "lstat/kahan.hpp"

namespace lstat {

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

namespace {

std::int64_t block_count(std::int64_t count, std::int64_t block) {
  return count <= 0 ? 0 : (count + block - 1) / block;
}

double sum_in_order(const std::vector<compensated_sum>& parts) {
  compensated_sum total;
  for (const auto& part : parts) total += part;
  return total.value();
}

// Quadratic character table of F_p: chi[v] in {-1, 0, 1}.
void fill_character_table(std::uint32_t p, std::vector<std::int8_t>& chi) {
  chi.assign(p, -1);
  chi[0] = 0;
  std::uint64_t square = 0;
  std::uint64_t step = 1;  // (y + 1)^2 - y^2 = 2y + 1
  for (std::uint32_t y = 1; y <= (p - 1) / 2; ++y) {
    square += step;
    if (square >= p) square -= p;
    step += 2;
    if (step >= p) step -= p;
    chi[square] = 1;
  }
}

std::uint64_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

// Sum of chi(x^3 + a x + b) over F_p, walking the cubic by finite differences.
std::int64_t character_sum(std::uint32_t p, short_model model,
                           const std::vector<std::int8_t>& chi) {
  const std::uint64_t a = reduce(model.a, p);
  std::uint64_t f = reduce(model.b, p);
  std::uint64_t d1 = (1 + a) % p;
  std::uint64_t d2 = 6 % p;
  const std::uint64_t six = 6 % p;
  std::int64_t total = 0;
  for (std::uint32_t x = 0; x < p; ++x) {
    total += chi[f];
    f += d1;
    if (f >= p) f -= p;
    d1 += d2;
    if (d1 >= p) d1 -= p;
    d2 += six;
    if (d2 >= p) d2 -= p;
  }
  return total;
}

}  // namespace

namespace kernels {

void sparse_dense_multiply(std::span<const int128> dense, std::span<const sparse_term> sparse,
                           std::span<int128> out) {
  const auto size = static_cast<std::int64_t>(out.size());
  const auto dense_size = static_cast<std::int64_t>(dense.size());
#pragma omp parallel for schedule(static, 4096)
  for (std::int64_t n = 0; n < size; ++n) {
    int128 acc = 0;
    for (const sparse_term& term : sparse) {
      const std::int64_t j = n - term.exponent;
      if (j < 0) break;
      if (j < dense_size) acc += static_cast<int128>(term.coefficient) * dense[j];
    }
    out[n] = acc;
  }
}

void elliptic_traces(std::span<const std::uint32_t> primes, std::span<const short_model> models,
                     std::span<std::int64_t> traces) {
  const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel
  {
    std::vector<std::int8_t> chi;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
      fill_character_table(primes[i], chi);
      traces[i] = -character_sum(primes[i], models[i], chi);
    }
  }
}

double window_square_sum(std::span<const double> prefix, std::int64_t count, double h,
                         double shift) {
  const auto block = static_cast<std::int64_t>(block_size);
  const std::int64_t blocks = block_count(count, block);
  std::vector<compensated_sum> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    compensated_sum acc;
    const std::int64_t first = 1 + b * block;
    const std::int64_t last = std::min(count, first + block - 1);
    for (std::int64_t x = first; x <= last; ++x) {
      const auto end = static_cast<std::int64_t>(std::floor(static_cast<double>(x) + h));
      const double d = prefix[end] - prefix[x] - shift;
      acc += d * d;
    }
    parts[b] = acc;
  }
  return sum_in_order(parts);
}

double multiplicative_window_square_sum(std::span<const double> prefix, std::int64_t count,
                                        double delta, double polar) {
  const auto block = static_cast<std::int64_t>(block_size);
  const std::int64_t blocks = block_count(count, block);
  std::vector<compensated_sum> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    compensated_sum acc;
    const std::int64_t first = 1 + b * block;
    const std::int64_t last = std::min(count, first + block - 1);
    for (std::int64_t x = first; x <= last; ++x) {
      const double h = delta * static_cast<double>(x);
      const auto end = static_cast<std::int64_t>(std::floor(static_cast<double>(x) + h));
      const double d = prefix[end] - prefix[x] - polar * h;
      acc += d * d;
    }
    parts[b] = acc;
  }
  return sum_in_order(parts);
}

void shifted_product_block_sums(std::span<const double> values, std::int64_t shift,
                                std::int64_t count, std::int64_t step,
                                std::span<double> block_sums) {
  const auto blocks = static_cast<std::int64_t>(block_sums.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < blocks; ++j) {
    compensated_sum acc;
    const std::int64_t last = std::min(count, (j + 1) * step);
    for (std::int64_t n = j * step + 1; n <= last; ++n) acc += values[n + shift] * values[n];
    block_sums[j] = acc.value();
  }
}

double zero_pair_sum(std::span<const double> ordinates, double log_x, double delta_cut,
                     std::int64_t& excluded_pairs) {
  const auto count = static_cast<std::int64_t>(ordinates.size());
  constexpr std::int64_t block = 1024;
  const std::int64_t blocks = block_count(count, block);
  std::vector<compensated_sum> parts(static_cast<std::size_t>(blocks));
  std::int64_t excluded = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : excluded)
  for (std::int64_t b = 0; b < blocks; ++b) {
    compensated_sum acc;
    const std::int64_t last = std::min(count, (b + 1) * block);
    for (std::int64_t m = b * block; m < last; ++m) {
      std::int64_t n = m + 1;
      for (; n < count; ++n) {
        const double gap = ordinates[n] - ordinates[m];
        if (gap > delta_cut) break;
        acc += 2.0 * std::cos(gap * log_x) * 4.0 / (4.0 + gap * gap);
      }
      excluded += 2 * (count - n);
    }
    parts[b] = acc;
  }
  excluded_pairs += excluded;
  return sum_in_order(parts);
}

}  // namespace kernels

namespace reference {

void sparse_dense_multiply(std::span<const int128> dense, std::span<const sparse_term> sparse,
                           std::span<int128> out) {
  std::fill(out.begin(), out.end(), int128{0});
  for (const sparse_term& term : sparse) {
    for (std::size_t j = 0; j < dense.size(); ++j) {
      const auto n = static_cast<std::int64_t>(j) + term.exponent;
      if (n >= static_cast<std::int64_t>(out.size())) break;
      out[n] += static_cast<int128>(term.coefficient) * dense[j];
    }
  }
}

std::int64_t elliptic_trace(std::uint32_t p, short_model model) {
  std::vector<std::int8_t> chi;
  fill_character_table(p, chi);
  const std::uint64_t a = reduce(model.a, p);
  const std::uint64_t b = reduce(model.b, p);
  std::int64_t total = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = x * x % p;
    total += chi[((x2 + a) % p * x + b) % p];
  }
  return -total;
}

void elliptic_traces(std::span<const std::uint32_t> primes, std::span<const short_model> models,
                     std::span<std::int64_t> traces) {
  for (std::size_t i = 0; i < primes.size(); ++i) traces[i] = elliptic_trace(primes[i], models[i]);
}

double window_square_sum(std::span<const double> prefix, std::int64_t count, double h,
                         double shift) {
  compensated_sum acc;
  for (std::int64_t x = 1; x <= count; ++x) {
    const auto end = static_cast<std::int64_t>(std::floor(static_cast<double>(x) + h));
    const double d = prefix[end] - prefix[x] - shift;
    acc += d * d;
  }
  return acc.value();
}

double multiplicative_window_square_sum(std::span<const double> prefix, std::int64_t count,
                                        double delta, double polar) {
  compensated_sum acc;
  for (std::int64_t x = 1; x <= count; ++x) {
    const double h = delta * static_cast<double>(x);
    const auto end = static_cast<std::int64_t>(std::floor(static_cast<double>(x) + h));
    const double d = prefix[end] - prefix[x] - polar * h;
    acc += d * d;
  }
  return acc.value();
}

void shifted_product_block_sums(std::span<const double> values, std::int64_t shift,
                                std::int64_t count, std::int64_t step,
                                std::span<double> block_sums) {
  for (std::size_t j = 0; j < block_sums.size(); ++j) {
    compensated_sum acc;
    const auto first = static_cast<std::int64_t>(j) * step + 1;
    const std::int64_t last = std::min(count, first + step - 1);
    for (std::int64_t n = first; n <= last; ++n) acc += values[n + shift] * values[n];
    block_sums[j] = acc.value();
  }
}

double zero_pair_sum(std::span<const double> ordinates, double log_x, double delta_cut,
                     std::int64_t& excluded_pairs) {
  compensated_sum acc;
  const auto count = static_cast<std::int64_t>(ordinates.size());
  for (std::int64_t m = 0; m < count; ++m) {
    for (std::int64_t n = m + 1; n < count; ++n) {
      const double gap = ordinates[n] - ordinates[m];
      if (gap > delta_cut) {
        excluded_pairs += 2;
        continue;
      }
      acc += 2.0 * std::cos(gap * log_x) * 4.0 / (4.0 + gap * gap);
    }
  }
  return acc.value();
}

}  // namespace reference

}  // namespace lstat
