#ifndef GAPLAB_FIXTURES_HPP_
#define GAPLAB_FIXTURES_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/domain.hpp"
#include "gaplab/gapcore/base_machine.hpp"
#include "gaplab/gapcore/gap_program.hpp"
#include "gaplab/gapcore/target_spec.hpp"
#include "gaplab/polyenc/oracle_machine.hpp"

namespace gaplab::fixtures {

// All randomized fixtures flow from one of these, so a fixed seed replays
// byte-identical experiments.
using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random nonzero integer in [-magnitude, magnitude].
BigInt rand_nonzero(Rng& rng, int magnitude);

// Random choice tree with at most `max_depth` binary choices.
gapcore::ChoiceTree random_choice_tree(Rng& rng, int max_depth);

// Table-backed machine with random trees over the domain.
gapcore::BaseMachine random_base_machine(Rng& rng, const Domain& dom, int max_depth,
                                         const std::string& name);

// Random gap program of AST depth <= depth over the domain: machines and
// small constants at the leaves, the closure combinators above them.
gapcore::GapProgram random_gap_program(Rng& rng, const Domain& dom, int depth);

// Oracle machine with a random query tree over a fresh universe of `m`
// strings, honoring the distinct-query discipline; tree depth <= depth.
polyenc::OracleMachine random_oracle_machine(Rng& rng, int m, int depth,
                                             const std::string& name);

// A promise instance: a target spec, a language choice per domain input, and
// a gap function honoring the promise (gap hits a listed target on accepted
// inputs and is 0 on rejected ones).
struct PromiseInstance {
  gapcore::TargetSpec spec;
  gapcore::GapProgram g;
  std::set<std::string> accepted;
};

// mode selects length- vs input-indexed targets; multiplicity r gives the
// list lengths. When realize_g is set the gap function is wrapped into an
// actual machine realization instead of an FP table.
PromiseInstance random_promise_instance(Rng& rng, const Domain& dom,
                                        gapcore::TargetMode mode,
                                        const NatPoly& multiplicity, bool realize_g);

// A two-sided instance: disjoint acceptance/rejection lists per length, and
// a gap function landing in the A-list on accepted inputs and in the R-list
// on rejected ones.
struct TwoSidedInstance {
  gapcore::TwoSidedTargetSpec spec;
  gapcore::GapProgram g;
  std::set<std::string> accepted;
};
TwoSidedInstance random_two_sided_instance(Rng& rng, const Domain& dom,
                                           const NatPoly& r_accept,
                                           const NatPoly& r_reject);

// An exact-counting instance: a machine with known accepting-path counts and
// an input-indexed target list planted to hit acc on about half the inputs.
struct CeqpInstance {
  gapcore::BaseMachinePtr machine;
  gapcore::TargetSpec spec;
  std::set<std::string> members;  // inputs where acc hits a listed target
};
CeqpInstance random_ceqp_instance(Rng& rng, const Domain& dom, const NatPoly& multiplicity);

// Named machine family for the oracle-stage experiments, all on inputs 0^n
// with universe Sigma^n.
std::vector<std::string> binary_strings(std::size_t n);
// gap = number of oracle strings of length n.
polyenc::OracleMachine counting_gap_machine(std::size_t n);
// acc = number of oracle strings of length n.
polyenc::OracleMachine counting_acc_machine(std::size_t n);
// Oracle-blind machine with `acc` accepting and `rej` rejecting leaves.
polyenc::OracleMachine constant_machine(std::size_t n, int acc, int rej);
// Single accepting path per oracle element, whose Qminus holds the lexic
// successor (used for conflicting-set fixtures).
polyenc::OracleMachine successor_machine(std::size_t n);
// Three accepting paths per oracle element, two of which die with a fixed
// partner string.
polyenc::OracleMachine three_path_machine(std::size_t n);
// Deterministic first-hit scan: acc = 1 for every nonempty oracle slice, so
// the acc-stage search is exhausted without a witness.
polyenc::OracleMachine scan_machine(std::size_t n);

}  // namespace gaplab::fixtures

#endif  // GAPLAB_FIXTURES_HPP_
