#ifndef GAPLAB_GAPCORE_TARGET_SPEC_HPP_
#define GAPLAB_GAPCORE_TARGET_SPEC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/domain.hpp"
#include "gaplab/gapcore/fp_func.hpp"
#include "gaplab/natpoly.hpp"

namespace gaplab::gapcore {

// Whose base string the indexed target function is applied to: 0^|x| for the
// length-indexed (LWPP-style) classes, x itself for the input-indexed
// (WPP / C=P) classes.
enum class TargetMode : std::uint8_t { kLengthIndexed, kInputIndexed };

// Finitely-represented indexed target function: admissible gap values for an
// accepted input x are f(<base, i>) for 1 <= i <= r(|x|).
struct TargetSpec {
  TargetMode mode = TargetMode::kLengthIndexed;
  Domain domain;
  FpFunc target;
  NatPoly multiplicity;  // r; the collapse compilers expect shapes like n^c + c

  // The admissible target list for input x, in index order (may repeat).
  std::vector<BigInt> targets_for(const std::string& x) const;
  // Single target value at index i.
  BigInt target_at(const std::string& x, std::uint64_t i) const;

  // Throws InvalidSpecError if any produced target on the test domain is
  // zero (the LWPP/WPP target functions map to Z - {0}).
  void validate_nonzero() const;
};

// Builds the spec whose target list for x is exactly {f(base)}: the classic
// single-target LWPP/WPP shape expressed in indexed form.
TargetSpec single_target_spec(FpFunc f, TargetMode mode, Domain domain);

// Simultaneous acceptance and rejection target lists. For each length j the
// value sets A_j and R_j must be disjoint.
struct TwoSidedTargetSpec {
  TargetSpec accept;  // f_A with bound r_A
  TargetSpec reject;  // f_R with bound r_R

  // Throws InvalidSpecError if A_j and R_j intersect for some length j on
  // the test domain.
  void validate_disjoint() const;
};

}  // namespace gaplab::gapcore

#endif  // GAPLAB_GAPCORE_TARGET_SPEC_HPP_
