#include "lstat/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lstat/arith.hpp"
#include "lstat/error.hpp"
#include "lstat/kahan.hpp"

namespace lstat {

std::string to_string(LFunctionKind kind) {
  switch (kind) {
    case LFunctionKind::zeta:
      return "zeta";
    case LFunctionKind::ramanujan_tau:
      return "tau";
    case LFunctionKind::elliptic_curve:
      return "ec";
  }
  return "?";
}

LFunctionKind parse_kind(const std::string& text) {
  if (text == "zeta") return LFunctionKind::zeta;
  if (text == "tau") return LFunctionKind::ramanujan_tau;
  if (text == "ec") return LFunctionKind::elliptic_curve;
  throw invalid_argument_error("unknown L-function kind '" + text + "' (expected zeta|tau|ec)");
}

WeierstrassInvariants invariants(const WeierstrassModel& m) {
  const int128 a1 = m.a1(), a2 = m.a2(), a3 = m.a3(), a4 = m.a4(), a6 = m.a6();
  WeierstrassInvariants inv{};
  inv.b2 = a1 * a1 + 4 * a2;
  inv.b4 = 2 * a4 + a1 * a3;
  inv.b6 = a3 * a3 + 4 * a6;
  inv.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
  inv.c6 = -inv.b2 * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
  inv.discriminant = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4 * inv.b4 * inv.b4 -
                     27 * inv.b6 * inv.b6 + 9 * inv.b2 * inv.b4 * inv.b6;
  return inv;
}

std::string to_string(const WeierstrassModel& model) {
  std::ostringstream out;
  for (std::size_t i = 0; i < model.a.size(); ++i) out << (i ? "," : "") << model.a[i];
  return out.str();
}

WeierstrassModel parse_weierstrass(const std::string& text) {
  WeierstrassModel model;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t end = text.find(',', start);
    if ((end == std::string::npos) != (i == 4)) {
      throw invalid_argument_error("weierstrass model needs exactly 5 comma-separated integers: '" +
                                   text + "'");
    }
    const std::string field = text.substr(start, end == std::string::npos ? end : end - start);
    try {
      std::size_t used = 0;
      model.a[i] = std::stoll(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw invalid_argument_error("bad weierstrass coefficient '" + field + "'");
    }
    start = end + 1;
  }
  return model;
}

LFunctionSpec LFunctionSpec::zeta() { return {LFunctionKind::zeta, 1, 1, 1, std::nullopt}; }

LFunctionSpec LFunctionSpec::ramanujan_tau() {
  return {LFunctionKind::ramanujan_tau, 2, 1, 0, std::nullopt};
}

LFunctionSpec LFunctionSpec::elliptic_curve(const WeierstrassModel& model,
                                            std::int64_t conductor) {
  if (conductor < 1) throw invalid_argument_error("conductor must be a positive integer");
  if (invariants(model).discriminant == 0) {
    throw invalid_argument_error("singular Weierstrass model " + to_string(model));
  }
  return {LFunctionKind::elliptic_curve, 2, conductor, 0, model};
}

double PrimeCoefficients::lambda_at(std::uint32_t p) const {
  const auto it = std::lower_bound(primes.begin(), primes.end(), p);
  if (it == primes.end() || *it != p) {
    throw invalid_argument_error("no coefficient stored for " + std::to_string(p));
  }
  return lambda[static_cast<std::size_t>(it - primes.begin())];
}

bool PrimeCoefficients::is_bad(std::uint32_t p) const {
  return std::binary_search(bad_primes.begin(), bad_primes.end(), p);
}

bool PrimeCoefficients::same_data(const PrimeCoefficients& other) const {
  return kind == other.kind && limit == other.limit && conductor == other.conductor &&
         weierstrass == other.weierstrass && primes == other.primes && raw == other.raw;
}

PrimeCoefficients make_coefficients(LFunctionKind kind, std::int64_t limit,
                                    std::int64_t conductor,
                                    std::optional<WeierstrassModel> model,
                                    std::vector<std::uint32_t> primes, std::vector<int128> raw) {
  if (kind == LFunctionKind::zeta) {
    throw invalid_argument_error("zeta has no stored prime coefficients");
  }
  if (primes.size() != raw.size()) {
    throw invalid_argument_error("prime and coefficient lists differ in length");
  }
  PrimeCoefficients out;
  out.kind = kind;
  out.limit = limit;
  out.conductor = kind == LFunctionKind::elliptic_curve ? conductor : 1;
  out.weierstrass = kind == LFunctionKind::elliptic_curve ? model : std::nullopt;
  out.lambda.resize(raw.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint32_t p = primes[i];
    const bool bad = out.conductor % p == 0;
    if (bad) out.bad_primes.push_back(p);
    if (kind == LFunctionKind::ramanujan_tau) {
      out.lambda[i] = static_cast<double>(static_cast<long double>(raw[i]) /
                                          std::pow(static_cast<long double>(p), 5.5L));
    } else {
      out.lambda[i] = static_cast<double>(raw[i]) / std::sqrt(static_cast<double>(p));
    }
    if (bad) {
      if (raw[i] < -1 || raw[i] > 1) {
        throw invariant_violation("a_p = " + to_string(raw[i]) + " at bad prime " +
                                  std::to_string(p) + " is not in {-1, 0, 1}");
      }
    } else if (std::fabs(out.lambda[i]) > 2.0 + 1e-12) {
      throw invariant_violation("coefficient at p = " + std::to_string(p) +
                                " breaks the bound |lambda(p)| <= 2 (raw " + to_string(raw[i]) +
                                ")");
    }
  }
  out.primes = std::move(primes);
  out.raw = std::move(raw);
  return out;
}

VonMangoldtTable::VonMangoldtTable(LFunctionSpec spec, std::vector<double> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  if (values_.empty()) values_.push_back(0.0);
  prefix_.assign(values_.size(), 0.0);
  compensated_sum acc;
  for (std::size_t n = 1; n < values_.size(); ++n) {
    acc += values_[n];
    prefix_[n] = acc.value();
  }
}

double VonMangoldtTable::psi(std::int64_t x, double h) const {
  const auto end = static_cast<std::int64_t>(std::floor(static_cast<double>(x) + h));
  if (x < 0 || end > limit()) {
    throw capacity_error("psi window (" + std::to_string(x) + ", " + std::to_string(end) +
                         "] exceeds table limit " + std::to_string(limit()));
  }
  if (end <= x) return 0.0;
  return prefix_[end] - prefix_[x];
}

VonMangoldtTable von_mangoldt_table(std::int64_t limit) {
  if (limit < 1) throw invalid_argument_error("von Mangoldt table limit must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(limit) + 1, 0.0);
  for (const std::uint32_t p : primes_up_to(limit)) {
    const double lp = std::log(static_cast<double>(p));
    for (std::int64_t q = p; q <= limit; q *= p) values[q] = lp;
  }
  return {LFunctionSpec::zeta(), std::move(values)};
}

std::string to_string(BadPrimeRule rule) {
  return rule == BadPrimeRule::power_sum ? "power-sum" : "chebyshev";
}

BadPrimeRule parse_bad_prime_rule(const std::string& text) {
  if (text == "power-sum") return BadPrimeRule::power_sum;
  if (text == "chebyshev") return BadPrimeRule::chebyshev;
  throw invalid_argument_error("unknown bad-prime rule '" + text +
                               "' (expected power-sum|chebyshev)");
}

VonMangoldtTable von_mangoldt_table(const LFunctionSpec& spec, const PrimeCoefficients& coeffs,
                                    std::int64_t limit, BadPrimeRule rule) {
  if (spec.kind() == LFunctionKind::zeta) return von_mangoldt_table(limit);
  if (limit < 1) throw invalid_argument_error("von Mangoldt table limit must be >= 1");
  if (coeffs.kind != spec.kind()) {
    throw invalid_argument_error("coefficients are for " + to_string(coeffs.kind) +
                                 ", table requested for " + to_string(spec.kind()));
  }
  if (spec.kind() == LFunctionKind::elliptic_curve &&
      (coeffs.conductor != spec.conductor() || coeffs.weierstrass != spec.weierstrass())) {
    throw invalid_argument_error("coefficients belong to a different elliptic curve");
  }
  if (coeffs.limit < limit) {
    throw capacity_error("coefficients cover p <= " + std::to_string(coeffs.limit) +
                         ", table needs " + std::to_string(limit));
  }
  std::vector<double> values(static_cast<std::size_t>(limit) + 1, 0.0);
  for (std::size_t i = 0; i < coeffs.primes.size() && coeffs.primes[i] <= limit; ++i) {
    const std::uint32_t p = coeffs.primes[i];
    const double lam = coeffs.lambda[i];
    const double lp = std::log(static_cast<double>(p));
    if (coeffs.is_bad(p) && rule == BadPrimeRule::power_sum) {
      double power = lam;
      for (std::int64_t q = p; q <= limit; q *= p, power *= lam) values[q] = power * lp;
      continue;
    }
    if (std::fabs(lam) > 2.0 + 1e-12) {
      throw invariant_violation("|lambda(" + std::to_string(p) + ")| > 2 at a good prime");
    }
    const double theta = std::acos(std::clamp(lam / 2.0, -1.0, 1.0));
    int k = 1;
    for (std::int64_t q = p; q <= limit; q *= p, ++k) values[q] = 2.0 * std::cos(k * theta) * lp;
  }
  return {spec, std::move(values)};
}

}  // namespace lstat
