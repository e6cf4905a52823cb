#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "lstat/lfunc.hpp"

namespace lstat {

// Coefficient cache files are UTF-8 text:
//
//   #lstat-coeffs kind=<zeta|tau|ec> limit=<L> conductor=<N> weierstrass=<a1,a2,a3,a4,a6|none>
//   <p> <tau(p) or a_p>          one line per prime, ascending
//   #crc32=<8 hex digits>        CRC-32 of every preceding byte
//
// Coefficients are written as exact integers, so a store/load round trip is
// lossless. Writers go through a temporary file and an atomic rename.

void cache_store(const std::filesystem::path& path, const PrimeCoefficients& coeffs);

/// Throws parse_error (with line number) on malformed lines,
/// corrupt_cache_error on a checksum mismatch and capacity_error when the
/// file covers fewer primes than `min_limit`.
PrimeCoefficients cache_load(const std::filesystem::path& path, std::int64_t min_limit = 0);

/// Imports a legacy dump: one integer per line, the i-th line holding the
/// coefficient at the i-th prime. Without `limit` the table ends at the last
/// prime present; with it, the line count must equal pi(limit).
PrimeCoefficients import_legacy_list(const std::filesystem::path& path, LFunctionKind kind,
                                     std::int64_t conductor,
                                     std::optional<WeierstrassModel> model,
                                     std::optional<std::int64_t> limit = std::nullopt);

/// Canonical file name inside a cache directory for the given L-function.
std::filesystem::path cache_file_name(const LFunctionSpec& spec);

}  // namespace lstat
