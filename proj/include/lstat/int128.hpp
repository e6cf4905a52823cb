#pragma once

#include <string>
#include <string_view>

namespace lstat {

using int128 = __int128;

std::string to_string(int128 value);

/// Parses an optionally signed decimal integer. Returns false on malformed
/// input or overflow.
bool parse_int128(std::string_view text, int128& out);

}  // namespace lstat
