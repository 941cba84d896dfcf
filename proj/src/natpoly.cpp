#include "gaplab/natpoly.hpp"

#include <sstream>
#include <utility>

namespace gaplab {

NatPoly::NatPoly(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

NatPoly NatPoly::power_plus(std::uint64_t c) {
  std::vector<std::uint64_t> v(c + 1, 0);
  v[0] = c;
  v[c] = 1;
  return NatPoly(std::move(v));
}

std::uint64_t NatPoly::eval(std::uint64_t n) const {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

std::string NatPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0 && !(first && k == 0)) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << coeffs_[k];
    } else {
      if (coeffs_[k] != 1) out << coeffs_[k] << "*";
      out << "n";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace gaplab
