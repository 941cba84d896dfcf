#include "gaplab/reconstruct/padded.hpp"

#include "gaplab/errors.hpp"

namespace gaplab::reconstruct {

using gapcore::FpFunc;
using gapcore::StrFunc;
using gapcore::TargetMode;
using gapcore::TargetSpec;

BigInt PaddedTarget::hhat(std::size_t m) const {
  BigInt prod = 1;
  for (std::size_t i = 0; i <= m; ++i) prod *= h_at(i);
  return prod;
}

BigInt PaddedTarget::hprime(std::size_t m, std::size_t n) const {
  BigInt prod = 1;
  for (std::size_t i = 0; i <= m; ++i) {
    if (i == n) continue;
    prod *= h_at(i);
  }
  return prod;
}

std::pair<BigInt, BigInt> padded_targets(const FpFunc& h, std::size_t input_length,
                                         std::size_t n, const Domain& domain) {
  if (n > input_length)
    throw DomainError("deck length exceeds the input length it is encoded in");
  PaddedTarget padded{h, domain};
  return {padded.hhat(input_length), padded.hprime(input_length, n)};
}

TargetSpec multiplied_to_indexed(const FpFunc& f1, const NatPoly& r,
                                 const Domain& domain) {
  for (std::size_t len = 0; len <= domain.max_len; ++len) {
    if (f1.eval(domain.zeroes(len), domain) == 0)
      throw InvalidSpecError("multiplied target function vanishes at length " +
                             std::to_string(len));
  }
  TargetSpec spec;
  spec.mode = TargetMode::kLengthIndexed;
  spec.domain = domain;
  // f2(<0^n, i>) = i * f1(0^n).
  spec.target = FpFunc::mul(FpFunc::pair_index(),
                            FpFunc::apply(f1, StrFunc::pair_first()));
  spec.multiplicity = r;
  return spec;
}

}  // namespace gaplab::reconstruct
