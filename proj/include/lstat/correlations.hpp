#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lstat/lfunc.hpp"

namespace lstat {

struct CorrelationCheckpoint {
  std::int64_t n;
  double value;
};

/// Running averages C(r, N; F) = (1/N) sum_{n <= N} Lambda(n + r; F) conj(Lambda(n; F)).
/// All implemented L-functions have real coefficients, so the conjugate is
/// the identity.
struct CorrelationSeries {
  LFunctionSpec spec;
  std::int64_t r;
  std::vector<CorrelationCheckpoint> checkpoints;
  std::optional<double> hl_reference;  // singular series, degree 1 only
};

inline constexpr std::int64_t default_correlation_step = 10'000;

/// Checkpoints at step, 2 step, ..., and at n itself if it is not a multiple.
CorrelationSeries correlation_scan(const VonMangoldtTable& table, std::int64_t r, std::int64_t n,
                                   std::int64_t step = default_correlation_step);

struct SingularSeries {
  std::int64_t r;
  std::int64_t prime_cutoff;
  double twin_constant;  // 2 prod_{2 < p <= cutoff} (1 - (p - 1)^{-2})
  double value;
  double tail_bound;     // |value - limit| < tail_bound
};

/// Hardy-Littlewood constant for prime pairs at distance r, truncated at
/// prime_cutoff. Exactly zero for odd r.
SingularSeries singular_series(std::int64_t r, std::int64_t prime_cutoff = 1'000'000);

/// 1 - log|r| / (2|r|), |r| >= 2.
double averaged_hl_asymptotic(std::int64_t r);

/// (1/(2|r|)) sum_{1 <= |R| <= |r|} singular_series(R).
double singular_series_window_average(std::int64_t r, std::int64_t prime_cutoff = 1'000'000);

/// -deg(F) Si(r) / (pi r), r != 0.
double smoothed_correlation_asymptotic(const LFunctionSpec& spec, double r);

}  // namespace lstat
