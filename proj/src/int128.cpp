#include "lstat/int128.hpp"

#include <algorithm>
#include <limits>

namespace lstat {

std::string to_string(int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with the negative magnitude so the most negative value is safe.
  std::string digits;
  int128 v = negative ? value : -value;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool parse_int128(std::string_view text, int128& out) {
  if (text.empty()) return false;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  constexpr int128 max = static_cast<int128>((static_cast<unsigned __int128>(1) << 127) - 1);
  int128 value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return false;
    const int d = c - '0';
    if (value > (max - d) / 10) return false;
    value = value * 10 + d;
  }
  out = negative ? -value : value;
  return true;
}

}  // namespace lstat
