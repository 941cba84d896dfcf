#ifndef GAPLAB_GAPCORE_COLLAPSE_HPP_
#define GAPLAB_GAPCORE_COLLAPSE_HPP_

#include <cstdint>

#include "gaplab/bigint.hpp"
#include "gaplab/gapcore/gap_program.hpp"
#include "gaplab/gapcore/target_spec.hpp"

namespace gaplab::gapcore {

// A compiled single-target witness: ghat hits fhat's single value on every
// accepted input and is zero on every rejected one.
struct CollapsedWitness {
  GapProgram ghat;
  FpFunc fhat;  // applied to 0^|x| (length-indexed) or to x (input-indexed)
};

// Target-collapse compiler for length-indexed lists: from (g, f, r) with up
// to r(|x|) admissible targets, builds
//
//   h1(<x,i>) = f(<0^|x|, i>) - g(x)
//   h2(x)     = prod_{1<=i<=r(|x|)} h1(<x,i>)
//   ghat(x)   = h2(x) - prod_{1<=i<=r(|x|)} f(<0^|x|, i>)
//   fhat(0^l) = -prod_{1<=i<=r(l)} f(<0^l, i>)
//
// so that ghat(x) = fhat(0^|x|) whenever g(x) hits any listed target, and
// ghat(x) = 0 whenever g(x) = 0. Throws InvalidSpecError on a zero target.
CollapsedWitness collapse_lwpp(const GapProgram& g, const TargetSpec& spec);

// Same construction with input-indexed targets: f and fhat read x itself.
CollapsedWitness collapse_wpp(const GapProgram& g, const TargetSpec& spec);

// Two-sided collapse (acceptance and rejection lists simultaneously):
//
//   ghat(x)       = prod_{1<=j<=r_R(|x|)} ( f_R(<0^|x|, j>) - g(x) )
//   fhat(<0^l,i>) = prod_{1<=j<=r_R(l)}   ( f_R(<0^l, j>) - f_A(<0^l, i>) )
//
// Hitting a rejection target sends ghat to zero; hitting acceptance target i
// sends ghat to the nonzero fhat(<0^|x|, i>). The result is a length-indexed
// instance with r_A targets, ready for collapse_lwpp chaining.
struct TwoSidedCollapse {
  GapProgram ghat;
  TargetSpec indexed;  // fhat with multiplicity r_A, length-indexed
};
TwoSidedCollapse collapse_two_sided(const GapProgram& g, const TwoSidedTargetSpec& spec);

// Exact-counting collapse: h2(x) = prod_{1<=i<=r(|x|)} (f(<x,i>) - acc_N(x)),
// which is zero exactly when the accepting-path count hits a listed target.
// Targets may be any integers here, zero included.
GapProgram collapse_ceqp(BaseMachinePtr acc_machine, const TargetSpec& spec);

// Target enumerator for the exponential-list class: 1, 2, 3, ... maps to
// -1, 1, -2, 2, ... so that indices 1..2k enumerate exactly the nonzero
// integers of magnitude at most k. Throws DomainError on i = 0.
BigInt exp_target_enumerator(std::uint64_t n, const BigInt& i);

}  // namespace gaplab::gapcore

#endif  // GAPLAB_GAPCORE_COLLAPSE_HPP_
