#ifndef GAPLAB_NATPOLY_HPP_
#define GAPLAB_NATPOLY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace gaplab {

// Polynomial with natural coefficients, used for time bounds, index ranges
// and multiplicity bounds. Evaluated at small arguments only.
class NatPoly {
 public:
  NatPoly() : coeffs_{0} {}
  explicit NatPoly(std::vector<std::uint64_t> coeffs);

  static NatPoly constant(std::uint64_t c) { return NatPoly({c}); }
  // n^c + c, the multiplicity-bound shape (requires c >= 1).
  static NatPoly power_plus(std::uint64_t c);

  std::uint64_t eval(std::uint64_t n) const;
  std::uint64_t operator()(std::uint64_t n) const { return eval(n); }

  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  bool operator==(const NatPoly& o) const { return coeffs_ == o.coeffs_; }

  // Human-readable form, e.g. "n^2 + 2".
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> coeffs_;  // coeffs_[k] is the coefficient of n^k
};

}  // namespace gaplab

#endif  // GAPLAB_NATPOLY_HPP_
