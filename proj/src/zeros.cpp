#include "lstat/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <string>

#include "lstat/arith.hpp"
#include "lstat/error.hpp"
#include "lstat/kahan.hpp"
#include "lstat/kernels.hpp"
#include "lstat/special.hpp"

namespace lstat {

std::size_t ZeroData::count_up_to(double t) const {
  return static_cast<std::size_t>(std::upper_bound(ordinates.begin(), ordinates.end(), t) -
                                  ordinates.begin());
}

ZeroData make_zero_data(std::vector<double> ordinates, std::string source) {
  if (ordinates.empty()) throw data_integrity_error(source + ": no zero ordinates");
  if (!(ordinates.front() > 0.0)) throw data_integrity_error(source + ": ordinates must be positive");
  for (std::size_t i = 1; i < ordinates.size(); ++i) {
    if (!(ordinates[i] > ordinates[i - 1])) {
      throw data_integrity_error(source + ": ordinates not strictly increasing at entry " +
                                 std::to_string(i + 1));
    }
  }
  return {std::move(ordinates), std::move(source)};
}

ZeroData load_zeros(const std::filesystem::path& path) {
  const std::string source = path.string();
  std::ifstream in(path);
  if (!in) throw data_integrity_error("cannot open " + source);
  std::vector<double> ordinates;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string field = line.substr(first, last - first + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size() || !std::isfinite(value)) {
      throw parse_error(source, line_no, "expected a decimal ordinate, got '" + field + "'");
    }
    if (!ordinates.empty() && !(value > ordinates.back())) {
      throw data_integrity_error(source + ":" + std::to_string(line_no) +
                                 ": ordinate is not above the previous one");
    }
    ordinates.push_back(value);
  }
  return make_zero_data(std::move(ordinates), source);
}

PairCorrelationResult pair_correlation_f(const ZeroData& zeros, double x, double t,
                                         double delta_cut) {
  if (!(x > 1.0)) throw invalid_argument_error("pair correlation needs X > 1");
  if (!(t > 0.0)) throw invalid_argument_error("pair correlation needs T > 0");
  if (zeros.ordinates.empty() || t > zeros.ordinates.back()) {
    throw capacity_error("T = " + std::to_string(t) + " exceeds the largest ordinate loaded");
  }
  if (!(delta_cut > 0.0)) throw invalid_argument_error("pair cut must be positive");
  const std::size_t used = zeros.count_up_to(t);
  const std::span<const double> window(zeros.ordinates.data(), used);
  std::int64_t excluded = 0;
  const double off = kernels::zero_pair_sum(window, std::log(x), delta_cut, excluded);

  PairCorrelationResult r{};
  r.x = x;
  r.t = t;
  r.zeros_used = static_cast<std::int64_t>(used);
  r.f_value = static_cast<double>(used) + off;  // diagonal: w(0) = 1 per zero
  const double log_t = std::log(t);
  r.normalized = r.f_value * 2 * pi / (t * log_t);
  const double scale = t / (2 * pi);
  r.conjecture_small_x = scale * (std::log(x) + log_t * log_t / (x * x));
  r.conjecture_large_x = scale * std::log(scale) - scale;
  r.delta_cut = delta_cut;
  r.tail_bound = std::isinf(delta_cut)
                     ? 0.0
                     : static_cast<double>(excluded) * 4.0 / (4.0 + delta_cut * delta_cut);
  return r;
}

double mean_density(const LFunctionSpec& spec, double t) {
  const double d = std::log(static_cast<double>(spec.conductor()) *
                            std::pow(std::fabs(t) / (2 * pi), spec.degree())) /
                   (2 * pi);
  if (!(d > 0.0)) {
    throw domain_error("mean density is not positive at t = " + std::to_string(t));
  }
  return d;
}

ZetaPairModel::ZetaPairModel(std::int64_t prime_cutoff) : cutoff_(prime_cutoff) {
  if (prime_cutoff < 1000) throw invalid_argument_error("prime cutoff must be >= 1000");
  for (const std::uint32_t p : primes_up_to(prime_cutoff)) primes_.push_back(p);
}

namespace {

void guard(double x) {
  if (std::fabs(x) < r2_singular_guard) {
    throw domain_error("|x| < 1e-3 is inside the singular guard band; use the x -> 0 expansion");
  }
}

}  // namespace

double ZetaPairModel::diagonal(double x) const {
  guard(x);
  const std::complex<double> s(1.0, x);
  const auto z = zeta_with_derivatives(s);
  const auto log_derivative = z.d1 / z.value;
  const auto second = z.d2 / z.value - log_derivative * log_derivative;  // (zeta'/zeta)'
  compensated_sum re;
  for (const double p : primes_) {
    const double lp = std::log(p);
    const auto term = lp / (std::exp(s * lp) - 1.0);
    re += (term * term).real();
  }
  return (second.real() - re.value()) / (2 * pi * pi);
}

double ZetaPairModel::offdiagonal(double x, double t) const {
  guard(x);
  if (!(t > 0.0)) throw invalid_argument_error("off-diagonal model needs T > 0");
  const std::complex<double> s(1.0, x);
  const auto z = zeta_with_derivatives(s).value;
  // The local factors are 1 + O(p^-2); multiply them in log space.
  std::complex<double> log_product = 0.0;
  for (const double p : primes_) {
    const auto a = std::exp(-s * std::log(p));
    const double inv = 1.0 / p;
    log_product += std::log((1.0 - a) * (1.0 - 2.0 * inv + a)) - 2.0 * std::log1p(-inv);
  }
  const double density = std::log(t / (2 * pi)) / (2 * pi);
  const auto phase = std::exp(std::complex<double>(0.0, -2 * pi * x * density));
  return (phase * std::norm(z) * std::exp(log_product)).real() / (2 * pi * pi);
}

double ZetaPairModel::rescaled_diagonal(double x, double density) const {
  if (!(density > 0.0)) throw domain_error("density must be positive");
  return diagonal(x / density) / (density * density);
}

double ZetaPairModel::rescaled_offdiagonal(double x, double density) const {
  if (!(density > 0.0)) throw domain_error("density must be positive");
  // T with mean density `density`: d(T) = log(T / 2 pi) / 2 pi.
  const double t = 2 * pi * std::exp(2 * pi * density);
  return offdiagonal(x / density, t) / (density * density);
}

double ZetaPairModel::diagonal_tail_bound() const {
  // sum_{n > P} (log n)^2 / (n - 1)^2 <= ((log P)^2 + 2 log P + 2) / (P - 1).
  const double p = static_cast<double>(cutoff_);
  const double lp = std::log(p);
  return (lp * lp + 2 * lp + 2) / (p - 1) / (2 * pi * pi);
}

double r2_diagonal_zeta(double x, std::int64_t prime_cutoff) {
  return ZetaPairModel(prime_cutoff).diagonal(x);
}

double r2_offdiagonal_zeta(double x, double t, std::int64_t prime_cutoff) {
  return ZetaPairModel(prime_cutoff).offdiagonal(x, t);
}

}  // namespace lstat
