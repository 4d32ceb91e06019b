#pragma once

#include <string_view>

namespace jssec {

/// Path glob match. `*` and `?` stay within one segment, `**` spans any
/// number of segments (including none). Paths use `/` separators; a leading
/// "./" on either side is ignored.
bool glob_match(std::string_view pattern, std::string_view path);

}  // namespace jssec
