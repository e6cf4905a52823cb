#include <string>
#include <vector>

#include "lstat/arith.hpp"
#include "lstat/error.hpp"
#include "lstat/kernels.hpp"
#include "lstat/lfunc.hpp"

namespace lstat {

namespace {

std::int64_t mod(int128 v, std::int64_t p) {
  const auto r = static_cast<std::int64_t>(v % p);
  return r < 0 ? r + p : r;
}

std::int64_t power_mod(std::int64_t base, std::int64_t exponent, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) result = static_cast<std::int64_t>(static_cast<int128>(result) * base % p);
    base = static_cast<std::int64_t>(static_cast<int128>(base) * base % p);
    exponent >>= 1;
  }
  return result;
}

// Points on the long Weierstrass model over F_p, including infinity.
std::int64_t count_points_exhaustive(const WeierstrassModel& m, std::int64_t p) {
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      const int128 lhs = static_cast<int128>(y) * y + static_cast<int128>(m.a1()) * x * y +
                         static_cast<int128>(m.a3()) * y;
      const int128 rhs = static_cast<int128>(x) * x * x + static_cast<int128>(m.a2()) * x * x +
                         static_cast<int128>(m.a4()) * x + m.a6();
      if (mod(lhs - rhs, p) == 0) ++count;
    }
  }
  return count;
}

}  // namespace

ReductionType reduction_type(const WeierstrassModel& model, std::int64_t conductor,
                             std::uint32_t prime) {
  const auto p = static_cast<std::int64_t>(prime);
  const auto inv = invariants(model);
  const bool singular = mod(inv.discriminant, p) == 0;
  if (conductor % p != 0) {
    if (singular) {
      throw invalid_argument_error("model has bad reduction at p = " + std::to_string(p) +
                                   ", which does not divide the conductor " +
                                   std::to_string(conductor) + " (model not minimal?)");
    }
    return ReductionType::good;
  }
  if (!singular) {
    throw invalid_argument_error("p = " + std::to_string(p) + " divides the conductor but the " +
                                 "model has good reduction there");
  }
  if (mod(inv.c4, p) == 0) return ReductionType::additive;
  // Multiplicative: the two tangent directions at the node are rational iff
  // the tangent-cone quadratic splits over F_p.
  if (p == 2) {
    for (std::int64_t x = 0; x < 2; ++x) {
      for (std::int64_t y = 0; y < 2; ++y) {
        const int128 f = static_cast<int128>(y) * y + model.a1() * x * y + model.a3() * y -
                         x * x * x - model.a2() * x * x - model.a4() * x - model.a6();
        const int128 fx = model.a1() * y - 3 * x * x - 2 * model.a2() * x - model.a4();
        const int128 fy = 2 * y + model.a1() * x + model.a3();
        if (mod(f, 2) == 0 && mod(fx, 2) == 0 && mod(fy, 2) == 0) {
          // Y^2 + XY + c X^2 with c = 3 x0 + a2 (mod 2): reducible iff c = 0.
          return mod(3 * x + model.a2(), 2) == 0 ? ReductionType::split_multiplicative
                                                 : ReductionType::nonsplit_multiplicative;
        }
      }
    }
    throw invalid_argument_error("no singular point found mod 2");
  }
  // Y^2 = g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 with Y = 2y + a1 x + a3; the node
  // sits at a double root x0 of g and the tangent slopes are sqrt(12 x0 + b2).
  const std::int64_t b2 = mod(inv.b2, p), b4 = mod(inv.b4, p), b6 = mod(inv.b6, p);
  for (std::int64_t x = 0; x < p; ++x) {
    const int128 g = ((4 * static_cast<int128>(x) + b2) * x + 2 * b4) * x + b6;
    const int128 dg = (12 * static_cast<int128>(x) + 2 * b2) * x + 2 * b4;
    if (mod(g, p) != 0 || mod(dg, p) != 0) continue;
    const std::int64_t slope_sq = mod(12 * static_cast<int128>(x) + b2, p);
    return power_mod(slope_sq, (p - 1) / 2, p) == 1 ? ReductionType::split_multiplicative
                                                    : ReductionType::nonsplit_multiplicative;
  }
  throw invalid_argument_error("no singular point found mod " + std::to_string(p));
}

PrimeCoefficients elliptic_coefficients(const WeierstrassModel& model, std::int64_t conductor,
                                        std::int64_t limit) {
  if (limit < 2) throw invalid_argument_error("elliptic_coefficients: limit must be >= 2");
  const auto spec = LFunctionSpec::elliptic_curve(model, conductor);  // validates the model
  const auto inv = invariants(model);
  auto primes = primes_up_to(limit);
  std::vector<int128> raw(primes.size(), 0);

  std::vector<std::size_t> batch_index;
  std::vector<std::uint32_t> batch_primes;
  std::vector<short_model> batch_models;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint32_t p = primes[i];
    switch (reduction_type(model, conductor, p)) {
      case ReductionType::split_multiplicative:
        raw[i] = 1;
        continue;
      case ReductionType::nonsplit_multiplicative:
        raw[i] = -1;
        continue;
      case ReductionType::additive:
        raw[i] = 0;
        continue;
      case ReductionType::good:
        break;
    }
    if (p <= 3) {
      raw[i] = p + 1 - count_points_exhaustive(model, p);
      continue;
    }
    // y^2 = x^3 - 27 c4 x - 54 c6 is isomorphic to the curve over F_p for p >= 5.
    batch_index.push_back(i);
    batch_primes.push_back(p);
    batch_models.push_back({mod(-27 * inv.c4, p), mod(-54 * inv.c6, p)});
  }
  std::vector<std::int64_t> traces(batch_primes.size());
  kernels::elliptic_traces(batch_primes, batch_models, traces);
  for (std::size_t j = 0; j < batch_index.size(); ++j) {
    const std::int64_t p = batch_primes[j];
    if (static_cast<int128>(traces[j]) * traces[j] > 4 * static_cast<int128>(p)) {
      throw invariant_violation("Hasse bound fails at p = " + std::to_string(p));
    }
    raw[batch_index[j]] = traces[j];
  }
  return make_coefficients(LFunctionKind::elliptic_curve, limit, spec.conductor(), model,
                           std::move(primes), std::move(raw));
}

}  // namespace lstat
