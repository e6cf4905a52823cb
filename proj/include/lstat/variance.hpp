#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lstat/lfunc.hpp"

namespace lstat {

/// (1/X) sum_{x=1..X} |psi(x, h; F) - m(F) h|^2 over integer x, windows (x, x + h].
double var_fixed(const VonMangoldtTable& table, std::int64_t x_max, double h);

/// (1/X) sum_{x=1..X} |psi(x, delta x; F) - m(F) delta x|^2.
double var_mult(const VonMangoldtTable& table, std::int64_t x_max, double delta);

// Regime predictions for Var^fix / h and Var^mul.

/// deg log(X/h) - deg (log 2 pi + gamma) + log q   (h above X^{1 - 1/deg})
double predict_small_h(const LFunctionSpec& spec, double x_max, double h);
/// (6 log X - (3 + 8 log 2)) / 6                    (h below X^{1 - 1/deg}, deg >= 2)
double predict_universal(const LFunctionSpec& spec, double x_max);
/// delta X (deg log(1/delta) + log q + (1 - gamma - log 2 pi) deg) / 2
double predict_mul_small(const LFunctionSpec& spec, double x_max, double delta);
/// delta X (3 log X - 4 log 2) / 6
double predict_mul_universal(const LFunctionSpec& spec, double x_max, double delta);

/// X^{1 - 1/deg}, the window length where the two regimes meet.
double crossover_h(const LFunctionSpec& spec, double x_max);

struct VarianceRow {
  double h;
  double log_ratio;  // log(X / h)
  double empirical;  // Var^fix(X, h) / h
  double pred_small_h;
  double pred_universal;
};

struct VarianceSeries {
  LFunctionSpec spec;
  std::int64_t x_max;
  std::vector<VarianceRow> rows;  // descending log_ratio
};

/// h_min, h_min * ratio, ... while <= h_max, built by repeated multiplication.
std::vector<double> geometric_h_grid(double h_min, double h_max, double ratio);

VarianceSeries variance_scan(const VonMangoldtTable& table, std::int64_t x_max,
                             std::span<const double> h_values);

VarianceSeries variance_scan(const VonMangoldtTable& table, std::int64_t x_max, double h_min,
                             double h_max, double ratio = 1.1);

}  // namespace lstat
