#include "lstat/coeff_cache.hpp"

#include <zlib.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lstat/arith.hpp"
#include "lstat/error.hpp"

namespace lstat {

namespace {

constexpr std::string_view header_tag = "#lstat-coeffs";
constexpr std::string_view crc_tag = "#crc32=";

std::string header_line(const PrimeCoefficients& c) {
  std::ostringstream out;
  out << header_tag << " kind=" << to_string(c.kind) << " limit=" << c.limit
      << " conductor=" << c.conductor
      << " weierstrass=" << (c.weierstrass ? to_string(*c.weierstrass) : std::string("none"));
  return out.str();
}

std::uint32_t crc_of(const std::string& bytes) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
}

std::int64_t parse_int64(const std::string& source, std::size_t line, std::string_view text) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw parse_error(source, line, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_integrity_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

void cache_store(const std::filesystem::path& path, const PrimeCoefficients& coeffs) {
  std::string body = header_line(coeffs) + "\n";
  for (std::size_t i = 0; i < coeffs.primes.size(); ++i) {
    body += std::to_string(coeffs.primes[i]);
    body += ' ';
    body += to_string(coeffs.raw[i]);
    body += '\n';
  }
  char crc[16];
  std::snprintf(crc, sizeof crc, "%08x", crc_of(body));
  body += std::string(crc_tag) + crc + "\n";

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw data_integrity_error("cannot write " + tmp.string());
    out << body;
    if (!out.flush()) throw data_integrity_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

PrimeCoefficients cache_load(const std::filesystem::path& path, std::int64_t min_limit) {
  const std::string source = path.string();
  const std::string text = read_all(path);
  const auto lines = split_lines(text);
  if (lines.empty() || !lines.front().starts_with(header_tag)) {
    throw parse_error(source, 1, "missing '#lstat-coeffs' header");
  }

  std::map<std::string, std::string> fields;
  {
    std::istringstream header(std::string(lines.front().substr(header_tag.size())));
    std::string token;
    while (header >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw parse_error(source, 1, "bad header field '" + token + "'");
      fields[token.substr(0, eq)] = token.substr(eq + 1);
    }
  }
  for (const char* key : {"kind", "limit", "conductor", "weierstrass"}) {
    if (!fields.count(key)) throw parse_error(source, 1, std::string("header lacks ") + key);
  }
  LFunctionKind kind;
  try {
    kind = parse_kind(fields["kind"]);
  } catch (const invalid_argument_error& e) {
    throw parse_error(source, 1, e.what());
  }
  const std::int64_t limit = parse_int64(source, 1, fields["limit"]);
  const std::int64_t conductor = parse_int64(source, 1, fields["conductor"]);
  std::optional<WeierstrassModel> model;
  if (fields["weierstrass"] != "none") {
    try {
      model = parse_weierstrass(fields["weierstrass"]);
    } catch (const invalid_argument_error& e) {
      throw parse_error(source, 1, e.what());
    }
  }

  // Locate the checksum line; everything before it is covered by the CRC.
  std::size_t crc_line = 0;
  for (std::size_t i = lines.size(); i-- > 1;) {
    if (lines[i].empty()) continue;
    if (!lines[i].starts_with(crc_tag)) throw parse_error(source, i + 1, "missing #crc32 trailer");
    crc_line = i;
    break;
  }
  if (crc_line == 0) throw parse_error(source, lines.size(), "missing #crc32 trailer");
  const std::size_t covered = static_cast<std::size_t>(lines[crc_line].data() - text.data());
  const std::string_view stored = lines[crc_line].substr(crc_tag.size());
  std::uint32_t expected = 0;
  const auto [ptr, ec] = std::from_chars(stored.data(), stored.data() + stored.size(), expected, 16);
  if (ec != std::errc() || ptr != stored.data() + stored.size()) {
    throw parse_error(source, crc_line + 1, "bad checksum '" + std::string(stored) + "'");
  }

  std::vector<std::uint32_t> primes;
  std::vector<int128> raw;
  for (std::size_t i = 1; i < crc_line; ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string_view::npos) throw parse_error(source, i + 1, "expected '<p> <value>'");
    const std::int64_t p = parse_int64(source, i + 1, trim(line.substr(0, space)));
    int128 value = 0;
    if (!parse_int128(trim(line.substr(space + 1)), value)) {
      throw parse_error(source, i + 1, "bad coefficient '" + std::string(line.substr(space + 1)) + "'");
    }
    if (p < 2 || p > limit || (!primes.empty() && p <= primes.back())) {
      throw parse_error(source, i + 1, "prime " + std::to_string(p) + " out of order or range");
    }
    primes.push_back(static_cast<std::uint32_t>(p));
    raw.push_back(value);
  }
  // Syntax errors above report their line; anything else is caught here.
  if (crc_of(text.substr(0, covered)) != expected) {
    throw corrupt_cache_error(source + ": checksum mismatch");
  }
  if (limit < min_limit) {
    throw capacity_error(source + " covers p <= " + std::to_string(limit) + ", need " +
                         std::to_string(min_limit));
  }

  if (kind == LFunctionKind::zeta) {
    if (!primes.empty()) throw parse_error(source, 2, "zeta caches carry no coefficients");
    PrimeCoefficients out;
    out.kind = kind;
    out.limit = limit;
    return out;
  }
  if (primes != primes_up_to(limit)) {
    throw corrupt_cache_error(source + ": prime list does not cover every prime <= " +
                              std::to_string(limit));
  }
  return make_coefficients(kind, limit, conductor, model, std::move(primes), std::move(raw));
}

PrimeCoefficients import_legacy_list(const std::filesystem::path& path, LFunctionKind kind,
                                     std::int64_t conductor,
                                     std::optional<WeierstrassModel> model,
                                     std::optional<std::int64_t> limit) {
  const std::string source = path.string();
  const std::string text = read_all(path);
  std::vector<int128> raw;
  std::size_t line_no = 0;
  for (const std::string_view line : split_lines(text)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    int128 value = 0;
    if (!parse_int128(t, value)) {
      throw parse_error(source, line_no, "expected an integer, got '" + std::string(t) + "'");
    }
    raw.push_back(value);
  }
  if (raw.empty()) throw data_integrity_error(source + ": no coefficients");
  // Enough primes to index every line: pi(x) > x / log x for x >= 17.
  std::int64_t bound = 100;
  auto primes = primes_up_to(bound);
  while (primes.size() < raw.size()) {
    bound *= 2;
    primes = primes_up_to(bound);
  }
  std::int64_t table_limit = primes[raw.size() - 1];
  if (limit) {
    const auto expected = primes_up_to(*limit).size();
    if (expected != raw.size()) {
      throw capacity_error(source + " holds " + std::to_string(raw.size()) +
                           " coefficients, but there are " + std::to_string(expected) +
                           " primes <= " + std::to_string(*limit));
    }
    table_limit = *limit;
  }
  primes.resize(raw.size());
  return make_coefficients(kind, table_limit, conductor, model, std::move(primes), std::move(raw));
}

std::filesystem::path cache_file_name(const LFunctionSpec& spec) {
  if (spec.kind() != LFunctionKind::elliptic_curve) return to_string(spec.kind()) + ".coeffs";
  std::string name = "ec-" + std::to_string(spec.conductor()) + "-" + to_string(*spec.weierstrass());
  for (char& c : name) {
    if (c == ',') c = '_';
  }
  return name + ".coeffs";
}

}  // namespace lstat
