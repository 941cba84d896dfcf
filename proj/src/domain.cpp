#include "gaplab/domain.hpp"

#include <algorithm>

#include "gaplab/errors.hpp"

namespace gaplab {

bool Domain::contains(const std::string& x) const {
  if (x.size() > max_len) return false;
  return std::all_of(x.begin(), x.end(),
                     [&](char c) { return alphabet.find(c) != std::string::npos; });
}

std::vector<std::string> Domain::enumerate() const {
  std::vector<std::string> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    auto level = enumerate_length(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<std::string> Domain::enumerate_length(std::size_t n) const {
  std::vector<std::string> out;
  std::string cur(n, zero_symbol());
  const std::size_t k = alphabet.size();
  while (true) {
    out.push_back(cur);
    // Odometer increment over alphabet positions, most significant first.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      std::size_t digit = alphabet.find(cur[pos]);
      if (digit + 1 < k) {
        cur[pos] = alphabet[digit + 1];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cur.end(),
                  zero_symbol());
        break;
      }
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::string pair_encode(const std::string& x, std::uint64_t i, const Domain& dom) {
  std::string out;
  out.reserve(2 * x.size() + 1 + static_cast<std::size_t>(i));
  out.append(x.size(), dom.one_symbol());
  out.push_back(dom.zero_symbol());
  out.append(x);
  out.append(static_cast<std::size_t>(i), dom.one_symbol());
  return out;
}

PairParts pair_decode(const std::string& s, const Domain& dom) {
  const char one = dom.one_symbol();
  const char zero = dom.zero_symbol();
  std::size_t len = 0;
  while (len < s.size() && s[len] == one) ++len;
  if (len >= s.size() || s[len] != zero)
    throw DomainError("not a pair encoding: missing length delimiter in \"" + s + "\"");
  std::size_t body = len + 1;
  if (body + len > s.size())
    throw DomainError("not a pair encoding: truncated first component in \"" + s + "\"");
  PairParts parts;
  parts.first = s.substr(body, len);
  for (std::size_t k = body + len; k < s.size(); ++k) {
    if (s[k] != one)
      throw DomainError("not a pair encoding: malformed index suffix in \"" + s + "\"");
    ++parts.index;
  }
  return parts;
}

bool is_pair(const std::string& s, const Domain& dom) {
  try {
    pair_decode(s, dom);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace gaplab
