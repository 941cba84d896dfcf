#ifndef GAPLAB_DOMAIN_HPP_
#define GAPLAB_DOMAIN_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace gaplab {

// Finite input domain: all strings over `alphabet` of length <= max_len.
// The default test domain is binary strings up to length 6.
struct Domain {
  std::string alphabet = "01";
  std::size_t max_len = 6;

  bool contains(const std::string& x) const;
  // All domain strings, shortest first, lexicographic within a length.
  std::vector<std::string> enumerate() const;
  // Strings of exactly length n over the alphabet, lexicographic.
  std::vector<std::string> enumerate_length(std::size_t n) const;

  char zero_symbol() const { return alphabet.at(0); }
  char one_symbol() const { return alphabet.at(1); }
  std::string zeroes(std::size_t n) const { return std::string(n, zero_symbol()); }

  bool operator==(const Domain& o) const {
    return alphabet == o.alphabet && max_len == o.max_len;
  }
};

// Canonical pairing <x, i> of a string with a natural index. Self-delimiting
// length-prefixed encoding over the first two alphabet symbols:
//
//   <x, i> = one^|x| zero x one^i
//
// Injective, decodable, and order-preserving in i (larger index, longer
// string). Nests: <<y,i>, j> decodes outer pair first. Fixed once here as
// the project-wide convention.
std::string pair_encode(const std::string& x, std::uint64_t i, const Domain& dom);

struct PairParts {
  std::string first;
  std::uint64_t index = 0;
};

// Decodes a pair; throws DomainError if `s` is not a valid encoding.
PairParts pair_decode(const std::string& s, const Domain& dom);
bool is_pair(const std::string& s, const Domain& dom);

}  // namespace gaplab

#endif  // GAPLAB_DOMAIN_HPP_
