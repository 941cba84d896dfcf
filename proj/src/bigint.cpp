#include "gaplab/bigint.hpp"

#include "gaplab/errors.hpp"

namespace gaplab {

BigInt parse_bigint(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size()) throw ParseError("empty integer literal");
  std::size_t first_digit = pos;
  for (; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9')
      throw ParseError("malformed integer literal \"" + text + "\"");
  }
  // Skip leading zeros so the converter stays in decimal mode.
  while (first_digit + 1 < text.size() && text[first_digit] == '0') ++first_digit;
  BigInt v(text.substr(first_digit));
  return negative ? -v : v;
}

}  // namespace gaplab
