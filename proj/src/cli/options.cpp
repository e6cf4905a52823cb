#include "options.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "lstat/arith.hpp"
#include "lstat/coeff_cache.hpp"
#include "lstat/error.hpp"

namespace lstat::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v)) {
    throw invalid_argument_error("not a number: '" + s + "'");
  }
  return v;
}

}  // namespace

LFunctionSpec make_spec(const Selector& selector) {
  parse_bad_prime_rule(selector.bad_primes);
  const LFunctionKind kind = parse_kind(selector.spec);
  switch (kind) {
    case LFunctionKind::zeta:
      return LFunctionSpec::zeta();
    case LFunctionKind::ramanujan_tau:
      return LFunctionSpec::ramanujan_tau();
    case LFunctionKind::elliptic_curve:
      if (selector.weierstrass.empty() || selector.conductor <= 0) {
        throw invalid_argument_error("--spec ec needs --weierstrass a1,a2,a3,a4,a6 and --conductor");
      }
      return LFunctionSpec::elliptic_curve(parse_weierstrass(selector.weierstrass),
                                           selector.conductor);
  }
  throw invalid_argument_error("unknown spec");
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split(text, ',')) {
    const auto fields = split(item, ':');
    if (fields.size() == 1) {
      values.push_back(to_double(fields[0]));
    } else if (fields.size() == 3) {
      const double from = to_double(fields[0]);
      const double to = to_double(fields[1]);
      const double step = to_double(fields[2]);
      if (!(step > 0) || to < from) throw invalid_argument_error("bad range '" + item + "'");
      // i * step rather than accumulation keeps 0.1-steps on their decimals.
      const auto count = static_cast<std::int64_t>(std::floor((to - from) / step + 1e-9));
      if (count > 10'000'000) throw invalid_argument_error("range '" + item + "' is too long");
      for (std::int64_t i = 0; i <= count; ++i) values.push_back(from + static_cast<double>(i) * step);
    } else {
      throw invalid_argument_error("bad grid item '" + item + "'");
    }
  }
  if (values.empty()) throw invalid_argument_error("empty grid");
  return values;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw invalid_argument_error("not an integer: '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw invalid_argument_error("empty list");
  return values;
}

std::optional<std::filesystem::path> cache_dir(const Common& common) {
  if (!common.cache_dir.empty()) return std::filesystem::path(common.cache_dir);
  if (const char* env = std::getenv("LSTAT_CACHE_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::int64_t inline_budget(LFunctionKind kind) {
  switch (kind) {
    case LFunctionKind::zeta:
      return std::int64_t{1} << 31;
    case LFunctionKind::ramanujan_tau:
      return tau_limit_max;
    case LFunctionKind::elliptic_curve:
      return 200'000;
  }
  return 0;
}

namespace {

std::string coeffs_hint(const LFunctionSpec& spec, std::int64_t limit) {
  std::string hint = "lstat coeffs --spec " + to_string(spec.kind());
  if (spec.weierstrass()) {
    hint += " --weierstrass " + to_string(*spec.weierstrass()) +
            " --conductor " + std::to_string(spec.conductor());
  }
  return hint + " --limit " + std::to_string(limit) + " --cache-dir <dir>";
}

void check_matches(const LFunctionSpec& spec, const PrimeCoefficients& c,
                   const std::filesystem::path& path) {
  if (c.kind != spec.kind() || c.conductor != spec.conductor() ||
      c.weierstrass != spec.weierstrass()) {
    throw data_integrity_error(path.string() + " holds coefficients of a different L-function");
  }
}

}  // namespace

PrimeCoefficients obtain_coefficients(const LFunctionSpec& spec, std::int64_t limit,
                                      const Common& common, std::ostream& log) {
  const auto dir = cache_dir(common);
  if (dir) {
    const auto path = *dir / cache_file_name(spec);
    if (std::filesystem::exists(path)) {
      auto c = cache_load(path, limit);
      check_matches(spec, c, path);
      log << "loaded " << c.primes.size() << " coefficients from " << path.string() << '\n';
      return c;
    }
  }
  if (limit > inline_budget(spec.kind())) {
    throw capacity_error("coefficients up to " + std::to_string(limit) +
                         " exceed the inline budget; build the cache first with `" +
                         coeffs_hint(spec, limit) + "`");
  }
  PrimeCoefficients c = spec.kind() == LFunctionKind::ramanujan_tau
                            ? tau_coefficients(limit)
                            : elliptic_coefficients(*spec.weierstrass(), spec.conductor(), limit);
  if (dir) {
    std::filesystem::create_directories(*dir);
    cache_store(*dir / cache_file_name(spec), c);
  }
  return c;
}

VonMangoldtTable build_table(const LFunctionSpec& spec, std::int64_t limit,
                             const Common& common, std::ostream& log) {
  if (spec.kind() == LFunctionKind::zeta) return von_mangoldt_table(limit);
  const auto coeffs = obtain_coefficients(spec, limit, common, log);
  return von_mangoldt_table(spec, coeffs, limit, parse_bad_prime_rule(common.selector.bad_primes));
}

Budget table_budget(const LFunctionSpec& spec, std::int64_t limit, const Common& common) {
  const double n = static_cast<double>(limit);
  const double primes = n / std::max(1.0, std::log(n) - 1.0);
  Budget b{16.0 * n + 4.0 * primes, 4.0 * n};
  if (spec.kind() == LFunctionKind::zeta) return b;
  b.memory_bytes += 28.0 * primes;
  const auto dir = cache_dir(common);
  const bool cached = dir && std::filesystem::exists(*dir / cache_file_name(spec));
  if (cached) return b;
  if (spec.kind() == LFunctionKind::ramanujan_tau) {
    b.memory_bytes += 2 * 16.0 * n;
    b.operations += 7.0 * n * std::sqrt(2.0 * n);
  } else {
    b.memory_bytes += 2.0 * std::sqrt(n) * 8.0;
    b.operations += primes * n / 2.0;
  }
  return b;
}

std::vector<std::string> config_arguments(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument_error("cannot open config file " + path.string());
  std::vector<std::string> args;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw invalid_argument_error(fmt::format("{}:{}: expected key=value", path.string(), line_no));
    }
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    if (key.empty() || key == "config") {
      throw invalid_argument_error(fmt::format("{}:{}: bad key", path.string(), line_no));
    }
    args.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
  }
  return args;
}

std::string format_double(double value) { return fmt::format("{:.15g}", value); }

}  // namespace lstat::cli
