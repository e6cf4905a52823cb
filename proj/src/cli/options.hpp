#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lstat/lfunc.hpp"

namespace lstat::cli {

struct Selector {
  std::string spec = "zeta";
  std::string weierstrass;
  std::int64_t conductor = 0;
  std::string bad_primes = "power-sum";
};

struct Common {
  Selector selector;
  std::string output = "-";
  std::string cache_dir;
  int threads = 0;
  bool dry_run = false;
  std::string config;
};

struct VarianceArgs {
  std::int64_t x = 0;
  double h_min = 50;
  double h_max = 10'000;
  double ratio = 1.1;
  std::string h_list;
};

struct CorrelateArgs {
  std::string r = "2";
  std::int64_t n = 0;
  std::int64_t step = 10'000;
};

struct HlArgs {
  std::string r = "2";
  std::int64_t cutoff = 1'000'000;
};

struct PaircorrArgs {
  std::string zeros;
  double x = 0;
  double t = 0;
  double delta_cut = 100;
};

struct ModelArgs {
  std::string x_grid = "0.1:10:0.1";
  double t = 1e6;
  std::int64_t cutoff = 100'000;
};

struct CoeffsArgs {
  std::int64_t limit = 0;
  std::string legacy_list;
};

LFunctionSpec make_spec(const Selector& selector);

/// "a,b,c" where each item is a value or an inclusive range "from:to:step".
std::vector<double> parse_grid(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

/// Cache directory from --cache-dir, falling back to LSTAT_CACHE_DIR.
std::optional<std::filesystem::path> cache_dir(const Common& common);

/// Largest limit computed inline when no cache file is present.
std::int64_t inline_budget(LFunctionKind kind);

/// Coefficients covering `limit`: cache first, then inline computation
/// within budget (stored back to the cache when one is configured).
PrimeCoefficients obtain_coefficients(const LFunctionSpec& spec, std::int64_t limit,
                                      const Common& common, std::ostream& log);

VonMangoldtTable build_table(const LFunctionSpec& spec, std::int64_t limit,
                             const Common& common, std::ostream& log);

struct Budget {
  double memory_bytes;
  double operations;
};

/// Memory and work for building a table up to `limit`, coefficients included.
Budget table_budget(const LFunctionSpec& spec, std::int64_t limit, const Common& common);

/// Reads key=value lines from a config file and returns them as --key=value
/// arguments, to be placed before the user's own flags.
std::vector<std::string> config_arguments(const std::filesystem::path& path);

std::string format_double(double value);

}  // namespace lstat::cli
