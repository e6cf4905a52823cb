#pragma once

// Data-parallel inner loops. Every kernel in lstat::kernels has a serial
// twin in lstat::reference with the same contract; tests hold the two
// against each other and bench/ times them.
//
// Parallel reductions are split into fixed-size blocks whose partial sums
// are combined in index order, so results do not depend on thread count.

#include <cstddef>
#include <cstdint>
#include <span>

#include "lstat/int128.hpp"

namespace lstat {

/// Caps the number of OpenMP threads used by the kernels (0 = runtime default).
void set_thread_count(int threads);
int thread_count();

/// One nonzero term c * q^e of a sparse power series.
struct sparse_term {
  std::int64_t exponent;
  std::int64_t coefficient;
};

/// Reduced short Weierstrass model y^2 = x^3 + a x + b over F_p, p >= 5.
struct short_model {
  std::int64_t a;
  std::int64_t b;
};

namespace kernels {

inline constexpr std::size_t block_size = std::size_t{1} << 16;

/// out[n] = sum_k sparse[k].coefficient * dense[n - sparse[k].exponent],
/// truncated to out.size() terms. Sparse exponents must be ascending.
void sparse_dense_multiply(std::span<const int128> dense, std::span<const sparse_term> sparse,
                           std::span<int128> out);

/// traces[i] = p_i + 1 - #E(F_{p_i}) for the short models models[i].
void elliptic_traces(std::span<const std::uint32_t> primes, std::span<const short_model> models,
                     std::span<std::int64_t> traces);

/// sum_{x=1..count} (prefix[floor(x + h)] - prefix[x] - shift)^2.
double window_square_sum(std::span<const double> prefix, std::int64_t count, double h,
                         double shift);

/// sum_{x=1..count} (prefix[floor(x + delta x)] - prefix[x] - polar * delta x)^2.
double multiplicative_window_square_sum(std::span<const double> prefix, std::int64_t count,
                                        double delta, double polar);

/// block_sums[j] = sum over n in (j * step, min((j+1) * step, count)] of
/// values[n + shift] * values[n].
void shifted_product_block_sums(std::span<const double> values, std::int64_t shift,
                                std::int64_t count, std::int64_t step,
                                std::span<double> block_sums);

/// Off-diagonal part of Montgomery's sum over the first `count` ordinates:
/// 2 * sum_{m<n, gap<=delta_cut} cos(gap * log_x) * 4 / (4 + gap^2).
/// Ordered pairs dropped by the cut are added to `excluded_pairs`.
double zero_pair_sum(std::span<const double> ordinates, double log_x, double delta_cut,
                     std::int64_t& excluded_pairs);

}  // namespace kernels

namespace reference {

void sparse_dense_multiply(std::span<const int128> dense, std::span<const sparse_term> sparse,
                           std::span<int128> out);

std::int64_t elliptic_trace(std::uint32_t p, short_model model);

void elliptic_traces(std::span<const std::uint32_t> primes, std::span<const short_model> models,
                     std::span<std::int64_t> traces);

double window_square_sum(std::span<const double> prefix, std::int64_t count, double h,
                         double shift);

double multiplicative_window_square_sum(std::span<const double> prefix, std::int64_t count,
                                        double delta, double polar);

void shifted_product_block_sums(std::span<const double> values, std::int64_t shift,
                                std::int64_t count, std::int64_t step,
                                std::span<double> block_sums);

double zero_pair_sum(std::span<const double> ordinates, double log_x, double delta_cut,
                     std::int64_t& excluded_pairs);

}  // namespace reference

}  // namespace lstat
