#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lstat/int128.hpp"

namespace lstat {

enum class LFunctionKind { zeta, ramanujan_tau, elliptic_curve };

/// "zeta", "tau" or "ec", the spelling used by the CLI and cache files.
std::string to_string(LFunctionKind kind);
LFunctionKind parse_kind(const std::string& text);

/// Long Weierstrass coefficients (a1, a2, a3, a4, a6).
struct WeierstrassModel {
  std::array<std::int64_t, 5> a{};

  std::int64_t a1() const { return a[0]; }
  std::int64_t a2() const { return a[1]; }
  std::int64_t a3() const { return a[2]; }
  std::int64_t a4() const { return a[3]; }
  std::int64_t a6() const { return a[4]; }

  friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;
};

/// Standard invariants b2..b8, c4, c6 and the discriminant.
struct WeierstrassInvariants {
  int128 b2, b4, b6, b8, c4, c6, discriminant;
};

WeierstrassInvariants invariants(const WeierstrassModel& model);

std::string to_string(const WeierstrassModel& model);
WeierstrassModel parse_weierstrass(const std::string& text);

/// Metadata of one of the three implemented L-functions.
class LFunctionSpec {
 public:
  static LFunctionSpec zeta();
  static LFunctionSpec ramanujan_tau();
  /// The conductor is taken as given; it is not derived from the model.
  static LFunctionSpec elliptic_curve(const WeierstrassModel& model, std::int64_t conductor);

  LFunctionKind kind() const { return kind_; }
  int degree() const { return degree_; }
  std::int64_t conductor() const { return conductor_; }
  int polar_order() const { return polar_order_; }
  const std::optional<WeierstrassModel>& weierstrass() const { return weierstrass_; }

  friend bool operator==(const LFunctionSpec&, const LFunctionSpec&) = default;

 private:
  LFunctionSpec(LFunctionKind kind, int degree, std::int64_t conductor, int polar_order,
                std::optional<WeierstrassModel> model)
      : kind_(kind), degree_(degree), conductor_(conductor), polar_order_(polar_order),
        weierstrass_(model) {}

  LFunctionKind kind_;
  int degree_;
  std::int64_t conductor_;
  int polar_order_;
  std::optional<WeierstrassModel> weierstrass_;
};

/// Prime coefficients of a degree-2 L-function, kept both as exact integers
/// (tau(p) or a_p) and in the unitary normalization lambda(p) = raw / p^{w/2}.
struct PrimeCoefficients {
  LFunctionKind kind = LFunctionKind::ramanujan_tau;
  std::int64_t limit = 0;
  std::int64_t conductor = 1;
  std::optional<WeierstrassModel> weierstrass;
  std::vector<std::uint32_t> primes;  // every prime <= limit, ascending
  std::vector<int128> raw;
  std::vector<double> lambda;
  std::vector<std::uint32_t> bad_primes;

  /// lambda(p) for a prime p <= limit; throws invalid_argument_error otherwise.
  double lambda_at(std::uint32_t p) const;
  bool is_bad(std::uint32_t p) const;

  /// Equality of metadata and exact integers; lambda is derived data.
  bool same_data(const PrimeCoefficients& other) const;
};

/// Builds PrimeCoefficients from exact integers, normalizing and checking
/// the Deligne/Hasse bound at good primes and a_p in {-1, 0, 1} at bad ones.
PrimeCoefficients make_coefficients(LFunctionKind kind, std::int64_t limit,
                                    std::int64_t conductor,
                                    std::optional<WeierstrassModel> model,
                                    std::vector<std::uint32_t> primes, std::vector<int128> raw);

inline constexpr std::int64_t tau_limit_max = 2'000'000;

/// tau(n) for 0 <= n <= limit (index 0 holds 0), from the q-expansion of
/// q * (sum_k (-1)^k (2k+1) q^{k(k+1)/2})^8.
std::vector<int128> tau_series(std::int64_t limit);

/// tau(p) and lambda(p; Delta) = tau(p) / p^{11/2} for p <= limit.
PrimeCoefficients tau_coefficients(std::int64_t limit);

enum class ReductionType { good, split_multiplicative, nonsplit_multiplicative, additive };

/// Reduction type at p and, for p | conductor, the trace a_p in {1, -1, 0}.
ReductionType reduction_type(const WeierstrassModel& model, std::int64_t conductor,
                             std::uint32_t p);

/// a_p = p + 1 - #E(F_p) at good p, and the reduction-type value at p | N.
PrimeCoefficients elliptic_coefficients(const WeierstrassModel& model, std::int64_t conductor,
                                        std::int64_t limit);

/// Generalized von Mangoldt values Lambda(n; F) for 1 <= n <= limit.
class VonMangoldtTable {
 public:
  VonMangoldtTable(LFunctionSpec spec, std::vector<double> values);

  const LFunctionSpec& spec() const { return spec_; }
  std::int64_t limit() const { return static_cast<std::int64_t>(values_.size()) - 1; }
  std::span<const double> values() const { return values_; }
  std::span<const double> prefix() const { return prefix_; }

  /// psi(x, h) = sum over x < n <= x + h of Lambda(n; F).
  double psi(std::int64_t x, double h) const;

 private:
  LFunctionSpec spec_;
  std::vector<double> values_;
  std::vector<double> prefix_;
};

/// The zeta table: the classical von Mangoldt function.
VonMangoldtTable von_mangoldt_table(std::int64_t limit);

/// How Lambda(p^k; F) is formed at primes dividing the conductor.
///   power_sum:  lambda(p)^k log p (one Satake parameter, the other zero)
///   chebyshev:  2 cos(k arccos(lambda(p)/2)) log p, the good-prime formula
enum class BadPrimeRule { power_sum, chebyshev };

std::string to_string(BadPrimeRule rule);
BadPrimeRule parse_bad_prime_rule(const std::string& text);

/// Lambda(p^k; F) = 2 cos(k arccos(lambda(p)/2)) log p at good p; bad
/// primes follow `rule`.
VonMangoldtTable von_mangoldt_table(const LFunctionSpec& spec, const PrimeCoefficients& coeffs,
                                    std::int64_t limit,
                                    BadPrimeRule rule = BadPrimeRule::power_sum);

}  // namespace lstat
