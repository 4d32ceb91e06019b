#include "jssec/glob.hpp"

namespace jssec {

namespace {

std::string_view strip_dot(std::string_view s) {
  while (s.size() >= 2 && s[0] == '.' && s[1] == '/') s.remove_prefix(2);
  return s;
}

bool match(std::string_view p, std::string_view s) {
  size_t pi = 0;
  size_t si = 0;
  while (pi < p.size()) {
    if (p.compare(pi, 2, "**") == 0) {
      size_t rest = pi + 2;
      bool slash_after = rest < p.size() && p[rest] == '/';
      if (slash_after) ++rest;
      std::string_view tail = p.substr(rest);
      // `**/` may match nothing, or anything ending at a segment boundary.
      if (slash_after) {
        if (match(tail, s.substr(si))) return true;
        for (size_t k = si; k < s.size(); ++k) {
          if (s[k] == '/' && match(tail, s.substr(k + 1))) return true;
        }
        return false;
      }
      for (size_t k = si; k <= s.size(); ++k) {
        if (match(tail, s.substr(k))) return true;
      }
      return false;
    }
    char c = p[pi];
    if (c == '*') {
      std::string_view tail = p.substr(pi + 1);
      for (size_t k = si; k <= s.size(); ++k) {
        if (match(tail, s.substr(k))) return true;
        if (k < s.size() && s[k] == '/') break;
      }
      return false;
    }
    if (si >= s.size()) return false;
    if (c == '?') {
      if (s[si] == '/') return false;
    } else if (c != s[si]) {
      return false;
    }
    ++pi;
    ++si;
  }
  return si == s.size();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
  return match(strip_dot(pattern), strip_dot(path));
}

}  // namespace jssec
