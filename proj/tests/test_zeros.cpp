#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <vector>

#include <unistd.h>

#include "lstat/error.hpp"
#include "lstat/lfunc.hpp"
#include "lstat/special.hpp"
#include "lstat/zeros.hpp"

using namespace lstat;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / (name + "-" + std::to_string(::getpid()));
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

// First 40 ordinates (to 9 decimals).
const std::vector<double> first_zeros = {
    14.134725142, 21.022039639, 25.010857580, 30.424876126, 32.935061588, 37.586178159,
    40.918719012, 43.327073281, 48.005150881, 49.773832478, 52.970321478, 56.446247697,
    59.347044003, 60.831778525, 65.112544048, 67.079810529, 69.546401711, 72.067157674,
    75.704690699, 77.144840069, 79.337375020, 82.910380854, 84.735492981, 87.425274613,
    88.809111208, 92.491899271, 94.651344041, 95.870634228, 98.831194218, 101.317851006,
    103.725538040, 105.446623052, 107.168611184, 111.029535543, 111.874659177, 114.320220915,
    116.226680321, 118.790782866, 121.370125002, 122.946829294};

double brute_f(const std::vector<double>& g, double x, double t) {
  long double total = 0;
  for (const double a : g) {
    if (a > t) continue;
    for (const double b : g) {
      if (b > t) continue;
      const double u = a - b;
      total += std::cos(u * std::log(x)) * 4.0 / (4.0 + u * u);
    }
  }
  return static_cast<double>(total);
}

}  // namespace

TEST_CASE("zero file parsing") {
  const auto p = write_temp("zeros-ok", "# header\n14.134725\n21.022040\n\n25.010858  # third\n");
  const auto z = load_zeros(p);
  CHECK(z.count() == 3);
  CHECK(z.ordinates[1] == 21.022040);
  CHECK(z.count_up_to(25.0) == 2);
  fs::remove(p);
}

TEST_CASE("zero file errors") {
  const auto empty = write_temp("zeros-empty", "# nothing\n");
  CHECK_THROWS_AS(load_zeros(empty), data_integrity_error);
  const auto order = write_temp("zeros-order", "14.1\n25.0\n21.0\n");
  CHECK_THROWS_AS(load_zeros(order), data_integrity_error);
  const auto bad = write_temp("zeros-bad", "14.1\n21.0\nabc\n");
  try {
    load_zeros(bad);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_zeros(fs::temp_directory_path() / "no-such-zeros-file"), data_integrity_error);
  for (const auto& p : {empty, order, bad}) fs::remove(p);
}

TEST_CASE("pair correlation against the brute-force double sum") {
  const auto zd = make_zero_data(first_zeros, "fixture");
  const double inf = std::numeric_limits<double>::infinity();
  const auto r = pair_correlation_f(zd, 50, 100, inf);
  CHECK(r.zeros_used == 29);
  CHECK(std::fabs(r.f_value - brute_f(first_zeros, 50, 100)) < 1e-9);
  CHECK(r.tail_bound == 0.0);
  for (const double x : {1.0001, 2.0, 13.0, 1e3}) {
    const auto full = pair_correlation_f(zd, x, 122.9468, inf);
    CHECK(std::fabs(full.f_value - brute_f(first_zeros, x, 122.9468)) < 1e-9);
    const auto cut = pair_correlation_f(zd, x, 122.9468, 10.0);
    CHECK(std::fabs(cut.f_value - full.f_value) <= cut.tail_bound);
    CHECK(cut.tail_bound > 0.0);
  }
}

TEST_CASE("pair correlation structure") {
  const auto zd = make_zero_data(first_zeros, "fixture");
  const auto near_one = pair_correlation_f(zd, 1.0000001, 100);
  CHECK(near_one.f_value >= static_cast<double>(near_one.zeros_used));
  const auto r = pair_correlation_f(zd, 30, 100);
  const double scale = 100 / (2 * pi);
  CHECK(r.conjecture_small_x == doctest::Approx(scale * (std::log(30.0) + std::pow(std::log(100.0), 2) / 900)));
  CHECK(r.conjecture_large_x == doctest::Approx(scale * std::log(scale) - scale));
  CHECK(r.normalized == doctest::Approx(r.f_value * 2 * pi / (100 * std::log(100.0))));
  CHECK_THROWS_AS(pair_correlation_f(zd, 30, 200), capacity_error);
  CHECK_THROWS_AS(pair_correlation_f(zd, 1.0, 100), invalid_argument_error);
  CHECK_THROWS_AS(make_zero_data({}, "empty"), data_integrity_error);
}

TEST_CASE("mean density") {
  const auto z = LFunctionSpec::zeta();
  CHECK(mean_density(z, 2 * pi * std::exp(1.0)) == doctest::Approx(1 / (2 * pi)).epsilon(1e-15));
  CHECK(mean_density(LFunctionSpec::ramanujan_tau(), 2 * pi * std::exp(1.0)) ==
        doctest::Approx(2 / (2 * pi)).epsilon(1e-15));
  CHECK(mean_density(z, 100) == doctest::Approx(std::log(100 / (2 * pi)) / (2 * pi)).epsilon(1e-15));
  CHECK_THROWS_AS(mean_density(z, 5.0), domain_error);
}

TEST_CASE("pair model against reference values") {
  const ZetaPairModel model(1000);
  // (x, diagonal, off-diagonal at T = 10^4), primes up to 1000, 25 digits.
  const double rows[][3] = {{0.5, -0.20167777268032133, -0.19606608227482012},
                            {1.0, -0.039428130933271775, -0.015204288878776638},
                            {3.0, -0.0063078938327619777, -0.0078908375126986113},
                            {-1.0, -0.039428130933271775, -0.015204288878776638}};
  for (const auto& row : rows) {
    CHECK(model.diagonal(row[0]) == doctest::Approx(row[1]).epsilon(1e-10));
    CHECK(model.offdiagonal(row[0], 1e4) == doctest::Approx(row[2]).epsilon(1e-10));
  }
  CHECK_THROWS_AS(model.diagonal(5e-4), domain_error);
  CHECK_THROWS_AS(model.offdiagonal(0.0, 1e4), domain_error);
  CHECK_THROWS_AS(ZetaPairModel(10), invalid_argument_error);
}

TEST_CASE("pair model: large x and cutoff stability") {
  const ZetaPairModel small(10'000), large(100'000);
  for (double x = 5; x <= 50; x += 2.5) {
    CHECK(std::fabs(large.diagonal(x)) < 0.2);
    CHECK(std::fabs(large.diagonal(x) - small.diagonal(x)) < 10 * small.diagonal_tail_bound());
  }
}

TEST_CASE("off-diagonal oscillates with the mean density") {
  // Moving T so that 2 pi x d(T) advances by pi flips the sign.
  const ZetaPairModel model(10'000);
  const double x = 1.5, t = 1e5;
  const double t_flip = t * std::exp(pi / x);
  const double a = model.offdiagonal(x, t);
  const double b = model.offdiagonal(x, t_flip);
  CHECK(a == doctest::Approx(-b).epsilon(1e-12));
}
