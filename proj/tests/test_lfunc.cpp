#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "lstat/arith.hpp"
#include "lstat/error.hpp"
#include "lstat/lfunc.hpp"
#include "oracles.hpp"

using namespace lstat;

namespace {

const WeierstrassModel e11{{0, -1, 1, -10, -20}};
const WeierstrassModel e27{{0, 0, 1, 0, -7}};
const WeierstrassModel e37{{0, 0, 1, -1, 0}};

// q prod (1 - q^n)^24 by repeated dense multiplication by (1 - q^n).
std::vector<int128> tau_by_product(int length) {
  std::vector<int128> series(length + 1, 0);
  series[0] = 1;
  for (int n = 1; n <= length; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int k = length; k >= n; --k) series[k] -= series[k - n];
    }
  }
  std::vector<int128> tau(length + 1, 0);
  for (int n = 1; n <= length; ++n) tau[n] = series[n - 1];
  return tau;
}

int128 sigma11_mod(std::int64_t n, std::int64_t m) {
  int128 total = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int128 power = 1;
    for (int i = 0; i < 11; ++i) power = power * d % m;
    total = (total + power) % m;
  }
  return total;
}

int128 mod(int128 v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

TEST_CASE("L-function metadata") {
  const auto z = LFunctionSpec::zeta();
  CHECK(z.degree() == 1);
  CHECK(z.conductor() == 1);
  CHECK(z.polar_order() == 1);
  const auto d = LFunctionSpec::ramanujan_tau();
  CHECK(d.degree() == 2);
  CHECK(d.polar_order() == 0);
  const auto e = LFunctionSpec::elliptic_curve(e37, 37);
  CHECK(e.degree() == 2);
  CHECK(e.conductor() == 37);
  CHECK(e.weierstrass() == e37);
  CHECK(parse_kind("tau") == LFunctionKind::ramanujan_tau);
  CHECK_THROWS_AS(parse_kind("dirichlet"), invalid_argument_error);
  CHECK_THROWS_AS(LFunctionSpec::elliptic_curve(WeierstrassModel{{0, 0, 0, 0, 0}}, 1),
                  invalid_argument_error);
  CHECK_THROWS_AS(LFunctionSpec::elliptic_curve(e11, 0), invalid_argument_error);
}

TEST_CASE("Weierstrass text form and invariants") {
  CHECK(parse_weierstrass("0,-1,1,-10,-20") == e11);
  CHECK(to_string(e11) == "0,-1,1,-10,-20");
  CHECK_THROWS_AS(parse_weierstrass("0,1,2"), invalid_argument_error);
  CHECK_THROWS_AS(parse_weierstrass("0,1,2,x,4"), invalid_argument_error);
  CHECK(invariants(e11).discriminant == -161051);  // -11^5
  CHECK(invariants(e27).discriminant == -19683);   // -3^9
  CHECK(invariants(e37).discriminant == 37);
}

TEST_CASE("tau series against the product expansion") {
  const auto fast = tau_series(600);
  const auto slow = tau_by_product(600);
  for (int n = 1; n <= 600; ++n) CHECK(fast[n] == slow[n]);
  CHECK(fast[1] == 1);
  CHECK(fast[2] == -24);
  CHECK(fast[3] == 252);
  CHECK(fast[6] == -6048);
  CHECK(fast[6] == fast[2] * fast[3]);
}

TEST_CASE("tau is multiplicative and satisfies the Hecke relation") {
  const auto tau = tau_series(10'000);
  for (std::int64_t m = 1; m <= 100; ++m) {
    for (std::int64_t n = 1; n <= 100; ++n) {
      if (std::gcd(m, n) == 1) CHECK(tau[m * n] == tau[m] * tau[n]);
    }
  }
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13, 31, 97}) {
    int128 p11 = 1;
    for (int i = 0; i < 11; ++i) p11 *= p;
    CHECK(tau[p * p] == tau[p] * tau[p] - p11);
  }
}

TEST_CASE("tau(n) is congruent to sigma_11(n) mod 691") {
  const auto tau = tau_series(1000);
  for (std::int64_t n = 1; n <= 1000; ++n) CHECK(mod(tau[n], 691) == sigma11_mod(n, 691));
}

TEST_CASE("tau coefficients obey the Deligne bound") {
  const auto c = tau_coefficients(100'000);
  CHECK(c.lambda_at(2) == doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-14));
  CHECK(c.lambda_at(2) == doctest::Approx(-0.530330).epsilon(1e-6));
  for (const double l : c.lambda) CHECK(std::fabs(l) <= 2.0);
  CHECK(c.primes.size() == 9592);
  CHECK_THROWS_AS(tau_series(tau_limit_max + 1), capacity_error);
  CHECK_THROWS_AS(c.lambda_at(4), invalid_argument_error);
}

TEST_CASE("elliptic traces: hand-checked values") {
  const auto c11 = elliptic_coefficients(e11, 11, 200);
  CHECK(c11.raw[0] == -2);  // a_2: five points over F_2
  CHECK(c11.lambda_at(11) == doctest::Approx(1 / std::sqrt(11.0)));
  const auto c27 = elliptic_coefficients(e27, 27, 200);
  CHECK(static_cast<std::int64_t>(c27.raw[3]) == -1);  // a_7
  CHECK(c27.is_bad(3));
  CHECK(c27.lambda_at(3) == 0.0);
}

TEST_CASE("elliptic traces against brute-force counts and Legendre sums") {
  for (const auto& [model, conductor] :
       std::vector<std::pair<WeierstrassModel, std::int64_t>>{{e11, 11}, {e27, 27}, {e37, 37}}) {
    const auto c = elliptic_coefficients(model, conductor, 200);
    const std::int64_t a[5] = {model.a[0], model.a[1], model.a[2], model.a[3], model.a[4]};
    for (std::size_t i = 0; i < c.primes.size(); ++i) {
      const std::int64_t p = c.primes[i];
      const auto ap = static_cast<std::int64_t>(c.raw[i]);
      CHECK(ap == p + 1 - oracle::count_points(a, p));
      if (p > 2 && conductor % p != 0) CHECK(ap == oracle::legendre_trace(a, p));
    }
  }
}

TEST_CASE("bad reduction types") {
  CHECK(reduction_type(e11, 11, 11) == ReductionType::split_multiplicative);
  CHECK(reduction_type(e27, 27, 3) == ReductionType::additive);
  CHECK(reduction_type(e37, 37, 37) == ReductionType::nonsplit_multiplicative);
  CHECK(reduction_type(e37, 37, 5) == ReductionType::good);
  // 11 divides the discriminant but not the conductor passed in.
  CHECK_THROWS_AS(reduction_type(e11, 1, 11), invalid_argument_error);
  // 5 divides the conductor passed in, but the model is good at 5.
  CHECK_THROWS_AS(reduction_type(e11, 55, 5), invalid_argument_error);
}

TEST_CASE("elliptic traces obey the Hasse bound") {
  const auto c = elliptic_coefficients(e37, 37, 100'000);
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    if (c.is_bad(c.primes[i])) continue;
    CHECK(std::fabs(c.lambda[i]) <= 2.0);
  }
}

TEST_CASE("make_coefficients rejects bound violations") {
  CHECK_THROWS_AS(make_coefficients(LFunctionKind::elliptic_curve, 5, 11, e11, {2, 3, 5},
                                    {int128{-2}, int128{-1}, int128{5}}),
                  invariant_violation);
  CHECK_THROWS_AS(make_coefficients(LFunctionKind::ramanujan_tau, 3, 1, std::nullopt, {2, 3},
                                    {int128{-24}}),
                  invalid_argument_error);
}

TEST_CASE("von Mangoldt tables") {
  const auto z = von_mangoldt_table(100);
  CHECK(z.values()[9] == doctest::Approx(std::log(3.0)));
  CHECK(z.values()[12] == 0.0);
  CHECK(z.psi(0, 10) == doctest::Approx(std::log(2.0 * 3 * 5 * 7 * 2 * 2 * 3)));
  CHECK(z.psi(10, 0.5) == 0.0);
  CHECK_THROWS_AS(z.psi(95, 10), capacity_error);

  const auto spec = LFunctionSpec::ramanujan_tau();
  const auto tc = tau_coefficients(1000);
  const auto t = von_mangoldt_table(spec, tc, 1000);
  const double l2 = -24.0 / std::pow(2.0, 5.5);
  CHECK(t.values()[4] == doctest::Approx((l2 * l2 - 2) * std::log(2.0)).epsilon(1e-13));
  CHECK(t.values()[4] == doctest::Approx(-1.19135).epsilon(1e-5));
  CHECK(t.values()[6] == 0.0);

  const auto espec = LFunctionSpec::elliptic_curve(e11, 11);
  const auto ec = elliptic_coefficients(e11, 11, 2000);
  const auto e = von_mangoldt_table(espec, ec, 2000);
  CHECK(e.values()[11] == doctest::Approx(std::log(11.0) / std::sqrt(11.0)));
  CHECK(e.values()[11] == doctest::Approx(0.7231).epsilon(1e-4));
  CHECK(e.values()[121] == doctest::Approx(std::log(11.0) / 11.0));
  CHECK_THROWS_AS(von_mangoldt_table(espec, ec, 3000), capacity_error);
  CHECK_THROWS_AS(von_mangoldt_table(spec, ec, 100), invalid_argument_error);
}

TEST_CASE("prime powers follow the Chebyshev recurrence") {
  // lambda(p^k) power sums s_k = alpha^k + beta^k with s_k = lambda s_{k-1} - s_{k-2}.
  const auto spec = LFunctionSpec::ramanujan_tau();
  const auto c = tau_coefficients(100'000);
  const auto t = von_mangoldt_table(spec, c, 100'000);
  for (std::size_t i = 0; i < c.primes.size() && c.primes[i] <= 316; ++i) {
    const std::int64_t p = c.primes[i];
    const double lam = c.lambda[i];
    double prev = 2.0, cur = lam;
    for (std::int64_t q = p; q <= 100'000; q *= p) {
      CHECK(t.values()[q] == doctest::Approx(cur * std::log(static_cast<double>(p))).epsilon(1e-11));
      const double next = lam * cur - prev;
      prev = cur;
      cur = next;
    }
  }
}
