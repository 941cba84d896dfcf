#include "gaplab/gapcore/target_spec.hpp"

#include <set>

#include "gaplab/errors.hpp"

namespace gaplab::gapcore {

std::vector<BigInt> TargetSpec::targets_for(const std::string& x) const {
  std::vector<BigInt> out;
  const std::uint64_t r = multiplicity.eval(x.size());
  out.reserve(static_cast<std::size_t>(r));
  for (std::uint64_t i = 1; i <= r; ++i) out.push_back(target_at(x, i));
  return out;
}

BigInt TargetSpec::target_at(const std::string& x, std::uint64_t i) const {
  const std::string base =
      mode == TargetMode::kLengthIndexed ? domain.zeroes(x.size()) : x;
  return target.eval(pair_encode(base, i, domain), domain);
}

void TargetSpec::validate_nonzero() const {
  if (mode == TargetMode::kLengthIndexed) {
    for (std::size_t len = 0; len <= domain.max_len; ++len) {
      const std::string x = domain.zeroes(len);
      const std::uint64_t r = multiplicity.eval(len);
      for (std::uint64_t i = 1; i <= r; ++i) {
        if (target_at(x, i) == 0)
          throw InvalidSpecError("zero target at length " + std::to_string(len) +
                                 ", index " + std::to_string(i));
      }
    }
    return;
  }
  for (const std::string& x : domain.enumerate()) {
    const std::uint64_t r = multiplicity.eval(x.size());
    for (std::uint64_t i = 1; i <= r; ++i) {
      if (target_at(x, i) == 0)
        throw InvalidSpecError("zero target on input \"" + x + "\", index " +
                               std::to_string(i));
    }
  }
}

TargetSpec single_target_spec(FpFunc f, TargetMode mode, Domain domain) {
  // Index 1 is the only index; drop it and hand f the base string.
  TargetSpec spec;
  spec.mode = mode;
  spec.domain = std::move(domain);
  spec.target = FpFunc::apply(std::move(f), StrFunc::pair_first());
  spec.multiplicity = NatPoly::constant(1);
  return spec;
}

void TwoSidedTargetSpec::validate_disjoint() const {
  if (accept.mode != TargetMode::kLengthIndexed ||
      reject.mode != TargetMode::kLengthIndexed)
    throw InvalidSpecError("two-sided lists must be length-indexed");
  const Domain& dom = accept.domain;
  for (std::size_t len = 0; len <= dom.max_len; ++len) {
    const std::string x = dom.zeroes(len);
    std::set<BigInt> a_values;
    for (const BigInt& v : accept.targets_for(x)) a_values.insert(v);
    for (const BigInt& v : reject.targets_for(x)) {
      if (a_values.count(v))
        throw InvalidSpecError("acceptance and rejection lists share value " +
                               v.str() + " at length " + std::to_string(len));
    }
  }
}

}  // namespace gaplab::gapcore
