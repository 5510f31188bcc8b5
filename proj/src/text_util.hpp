#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace circperm::detail {

// Reads one UTF-8 superscript digit at s[i]; advances i and returns the
// digit, or returns -1 and leaves i unchanged.
inline int superscript_digit(std::string_view s, std::size_t& i) {
  auto u = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  if (i + 1 < s.size() && u(i) == 0xC2) {
    if (u(i + 1) == 0xB9) { i += 2; return 1; }
    if (u(i + 1) == 0xB2) { i += 2; return 2; }
    if (u(i + 1) == 0xB3) { i += 2; return 3; }
  }
  if (i + 2 < s.size() && u(i) == 0xE2 && u(i + 1) == 0x81) {
    const int b = u(i + 2);
    if (b == 0xB0) { i += 3; return 0; }
    if (b >= 0xB4 && b <= 0xB9) { i += 3; return b - 0xB0; }
  }
  return -1;
}

// Reads an optional exponent, either "^123" or superscript digits.
// Returns 1 when none is present and -1 on a dangling '^'.
inline long read_exponent(std::string_view s, std::size_t& i) {
  if (i < s.size() && s[i] == '^') {
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) return -1;
    const long v = std::stol(std::string(s.substr(i + 1, j - i - 1)));
    i = j;
    return v;
  }
  std::size_t j = i;
  int d = superscript_digit(s, j);
  if (d < 0) return 1;
  long v = 0;
  while (d >= 0) {
    v = v * 10 + d;
    i = j;
    d = superscript_digit(s, j);
  }
  return v;
}

}  // namespace circperm::detail
