#ifndef GAPLAB_GAPCORE_VERIFY_HPP_
#define GAPLAB_GAPCORE_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/gapcore/gap_program.hpp"
#include "gaplab/gapcore/target_spec.hpp"

namespace gaplab::gapcore {

// The gap-promise classes whose defining implications the checker sweeps.
enum class CountingClass : std::uint8_t {
  kLWPP,      // single length-indexed target
  kRLWPP,     // up to r(|x|) length-indexed targets
  kWPP,       // single input-indexed target
  kRWPP,      // up to r(|x|) input-indexed targets
  kTwoSided,  // acceptance and rejection target lists
  kCeqP,      // membership iff gap is zero
};

std::string to_string(CountingClass cls);

// A decision oracle for the language being checked; total on the domain.
using LanguageOracle = std::function<bool(const std::string&)>;

struct Violation {
  std::string input;
  BigInt gap;
  // Admissible values at this input; empty means "any nonzero value".
  std::vector<BigInt> expected;
  std::string verdict;
};

struct VerifyReport {
  CountingClass cls;
  std::uint64_t inputs_checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustively checks the class's defining implications for every input of
// the program's domain. Promise violations are reported as data, never
// thrown. The spec is a TargetSpec for the single/indexed classes and a
// TwoSidedTargetSpec for the two-sided class; kCeqP ignores target lists and
// checks membership iff gap zero.
VerifyReport verify_class_membership(
    const GapProgram& g,
    const std::variant<TargetSpec, TwoSidedTargetSpec>& spec,
    const LanguageOracle& language, CountingClass cls);

}  // namespace gaplab::gapcore

#endif  // GAPLAB_GAPCORE_VERIFY_HPP_
