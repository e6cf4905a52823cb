#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lstat/lfunc.hpp"

namespace lstat {

/// Ordinates gamma of zeros 1/2 + i gamma, strictly increasing and positive.
struct ZeroData {
  std::vector<double> ordinates;
  std::string source_path;

  std::size_t count() const { return ordinates.size(); }
  /// Number of ordinates <= t.
  std::size_t count_up_to(double t) const;
};

/// One decimal ordinate per line; blank lines and '#' comments are skipped.
ZeroData load_zeros(const std::filesystem::path& path);
ZeroData make_zero_data(std::vector<double> ordinates, std::string source);

inline constexpr double default_pair_cut = 100.0;

struct PairCorrelationResult {
  double x;
  double t;
  std::int64_t zeros_used;  // ordinates with 0 < gamma <= T
  double f_value;
  double normalized;          // F * 2 pi / (T log T)
  double conjecture_small_x;  // (T / 2 pi)(log X + (log T)^2 / X^2)
  double conjecture_large_x;  // (T / 2 pi) log(T / 2 pi) - T / 2 pi
  double delta_cut;
  double tail_bound;          // |F - F_untruncated| <= tail_bound
};

/// Montgomery's F(X, T) = sum_{0 < gamma_m, gamma_n <= T} X^{i(gamma_m - gamma_n)}
/// w(gamma_m - gamma_n) with w(u) = 4 / (4 + u^2). Pairs further apart than
/// delta_cut are dropped and bounded; pass infinity for the full double sum.
PairCorrelationResult pair_correlation_f(const ZeroData& zeros, double x, double t,
                                         double delta_cut = default_pair_cut);

/// (1/2 pi) log(q (|t| / 2 pi)^deg); throws domain_error if not positive.
double mean_density(const LFunctionSpec& spec, double t);

inline constexpr double r2_singular_guard = 1e-3;

/// Two-point correlation model for the zeta zeros (Conrey-Snaith form),
/// arithmetic factors evaluated as Euler products over p <= prime_cutoff.
class ZetaPairModel {
 public:
  explicit ZetaPairModel(std::int64_t prime_cutoff);

  std::int64_t prime_cutoff() const { return cutoff_; }

  /// (1/2 pi^2) Re[(zeta'/zeta)'(1 + ix) - sum_p (log p / (p^{1+ix} - 1))^2]
  double diagonal(double x) const;
  /// (1/2 pi^2) Re[exp(-2 pi i x d(T)) |zeta(1+ix)|^2 prod_p A_p(x)]
  double offdiagonal(double x, double t) const;

  /// Unfolded to unit mean spacing at mean density `density`.
  double rescaled_diagonal(double x, double density) const;
  double rescaled_offdiagonal(double x, double density) const;

  /// Bound on the omitted primes' contribution to the prime sum in diagonal().
  double diagonal_tail_bound() const;

 private:
  std::int64_t cutoff_;
  std::vector<double> primes_;
};

double r2_diagonal_zeta(double x, std::int64_t prime_cutoff);
double r2_offdiagonal_zeta(double x, double t, std::int64_t prime_cutoff);

}  // namespace lstat
