#include "lstat/variance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lstat/error.hpp"
#include "lstat/kernels.hpp"
#include "lstat/special.hpp"

namespace lstat {

namespace {

void check_window(const VonMangoldtTable& table, std::int64_t x_max, double reach) {
  const auto end = static_cast<std::int64_t>(std::floor(static_cast<double>(x_max) + reach));
  if (end > table.limit()) {
    throw capacity_error("variance windows reach n = " + std::to_string(end) +
                         ", table stops at " + std::to_string(table.limit()));
  }
}

}  // namespace

double var_fixed(const VonMangoldtTable& table, std::int64_t x_max, double h) {
  if (x_max < 1) throw invalid_argument_error("var_fixed needs X >= 1");
  if (!(h >= 1.0) || h > static_cast<double>(x_max)) {
    throw invalid_argument_error("var_fixed needs 1 <= h <= X");
  }
  check_window(table, x_max, h);
  const double shift = table.spec().polar_order() * h;
  return kernels::window_square_sum(table.prefix(), x_max, h, shift) / static_cast<double>(x_max);
}

double var_mult(const VonMangoldtTable& table, std::int64_t x_max, double delta) {
  if (x_max < 1) throw invalid_argument_error("var_mult needs X >= 1");
  if (!(delta > 0.0) || delta > 1.0) throw invalid_argument_error("var_mult needs 0 < delta <= 1");
  check_window(table, x_max, delta * static_cast<double>(x_max));
  return kernels::multiplicative_window_square_sum(table.prefix(), x_max, delta,
                                                   table.spec().polar_order()) /
         static_cast<double>(x_max);
}

double predict_small_h(const LFunctionSpec& spec, double x_max, double h) {
  const double deg = spec.degree();
  return deg * std::log(x_max / h) - deg * (std::log(2 * pi) + euler_gamma) +
         std::log(static_cast<double>(spec.conductor()));
}

double predict_universal(const LFunctionSpec&, double x_max) {
  return (6.0 * std::log(x_max) - (3.0 + 8.0 * std::log(2.0))) / 6.0;
}

double predict_mul_small(const LFunctionSpec& spec, double x_max, double delta) {
  const double deg = spec.degree();
  return 0.5 * delta * x_max *
         (deg * std::log(1.0 / delta) + std::log(static_cast<double>(spec.conductor())) +
          (1.0 - euler_gamma - std::log(2 * pi)) * deg);
}

double predict_mul_universal(const LFunctionSpec&, double x_max, double delta) {
  return delta * x_max * (3.0 * std::log(x_max) - 4.0 * std::log(2.0)) / 6.0;
}

double crossover_h(const LFunctionSpec& spec, double x_max) {
  return std::pow(x_max, 1.0 - 1.0 / spec.degree());
}

std::vector<double> geometric_h_grid(double h_min, double h_max, double ratio) {
  if (!(h_min > 0.0) || h_min > h_max) throw invalid_argument_error("h grid needs 0 < h_min <= h_max");
  if (!(ratio > 1.0)) throw invalid_argument_error("h grid ratio must exceed 1");
  std::vector<double> grid;
  for (double h = h_min; h <= h_max; h = ratio * h) grid.push_back(h);
  return grid;
}

VarianceSeries variance_scan(const VonMangoldtTable& table, std::int64_t x_max,
                             std::span<const double> h_values) {
  if (h_values.empty()) throw invalid_argument_error("variance scan needs at least one h");
  const double reach = *std::max_element(h_values.begin(), h_values.end());
  check_window(table, x_max, reach);
  const auto& spec = table.spec();
  const auto x = static_cast<double>(x_max);
  VarianceSeries series{spec, x_max, {}};
  for (const double h : h_values) {
    series.rows.push_back({h, std::log(x / h), var_fixed(table, x_max, h) / h,
                           predict_small_h(spec, x, h), predict_universal(spec, x)});
  }
  std::stable_sort(series.rows.begin(), series.rows.end(),
                   [](const VarianceRow& a, const VarianceRow& b) { return a.log_ratio > b.log_ratio; });
  return series;
}

VarianceSeries variance_scan(const VonMangoldtTable& table, std::int64_t x_max, double h_min,
                             double h_max, double ratio) {
  const auto grid = geometric_h_grid(h_min, h_max, ratio);
  return variance_scan(table, x_max, grid);
}

}  // namespace lstat
