#ifndef GAPLAB_BIGINT_HPP_
#define GAPLAB_BIGINT_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gaplab {

// Exact arbitrary-precision integer. Gap values are products of target lists
// and path counts, both of which overflow 64 bits quickly.
using BigInt = boost::multiprecision::cpp_int;

// Strict decimal parse: [+-]?[0-9]+ only. The underlying constructor honors
// C-style octal/hex prefixes, which is wrong for serialized values like
// "09". Throws ParseError on anything else.
BigInt parse_bigint(const std::string& text);

}  // namespace gaplab

#endif  // GAPLAB_BIGINT_HPP_
