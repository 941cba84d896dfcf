#ifndef GAPLAB_DIAG_STAGE_HPP_
#define GAPLAB_DIAG_STAGE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/natpoly.hpp"
#include "gaplab/polyenc/oracle_machine.hpp"

namespace gaplab::diag {

// Deterministic oracle machine as a query tree with one integer leaf per
// oracle: enough structure to produce the stage value and its queried set.
class DetMachine {
 public:
  struct Node {
    bool is_leaf = true;
    BigInt value;        // leaf
    std::string query;   // internal
    std::shared_ptr<const Node> yes, no;
  };
  using NodePtr = std::shared_ptr<const Node>;

  DetMachine() : DetMachine(leaf(0), NatPoly::constant(0)) {}
  DetMachine(NodePtr root, NatPoly time_bound)
      : root_(std::move(root)), time_bound_(std::move(time_bound)) {}

  static NodePtr leaf(BigInt value);
  static NodePtr query(std::string w, NodePtr yes, NodePtr no);

  const NodePtr& root() const { return root_; }
  const NatPoly& time_bound() const { return time_bound_; }

  struct RunResult {
    BigInt value;
    std::set<std::string> queried;
  };
  RunResult run(const std::set<std::string>& oracle) const;

 private:
  NodePtr root_;
  NatPoly time_bound_;
};

// The test language of the oracle constructions: 0^n is in L_B exactly when
// B holds some string of length n.
bool test_language_member(const std::set<std::string>& b, std::size_t n);

// One diagonalization stage: machines N and M, the stage length n_j, the
// oracle built so far, M's value and length-n_j queried set under it, and
// the multiplicity bound r.
struct StageContext {
  polyenc::OracleMachine n_machine;
  DetMachine m_machine;
  std::size_t n_j = 0;
  std::set<std::string> b_prev;
  std::set<std::string> t;  // length-n_j strings M queries under b_prev
  BigInt val;
  NatPoly r;

  std::string input() const { return std::string(n_j, '0'); }
  // p_j(n_j): the common runtime bound of the stage's machine pair.
  std::uint64_t p_at_stage() const;
  // Candidate strings Sigma^{n_j} - T in lexicographic order.
  std::vector<std::string> candidates() const;
};

// Runs M under b_prev to fill T and val.
StageContext make_stage_context(polyenc::OracleMachine n_machine, DetMachine m_machine,
                                std::size_t n_j, std::set<std::string> b_prev,
                                NatPoly r);

// Gap-variant stage search: the first C (empty set first, then size 1
// ascending lexicographically, then 2, ... up to r(n_j)) with
//   |C| = 0 and gap under b_prev != 0, or
//   |C| >= 1 and gap under b_prev + C != val.
// nullopt when the exhaustive search finds neither; ResourceError once
// `budget` candidate sets have been evaluated.
std::optional<std::set<std::string>> gap_stage_search(const StageContext& ctx,
                                                      std::uint64_t budget = 1u << 20);

// Accepting-path variant: |C| in {1, 2} with acc != val, or C empty with
// acc != 0.
std::optional<std::set<std::string>> acc_stage_search(const StageContext& ctx,
                                                      std::uint64_t budget = 1u << 20);

// Re-simulation of the search disjunctions for a returned C.
bool confirm_gap_stage(const StageContext& ctx, const std::set<std::string>& c);
bool confirm_acc_stage(const StageContext& ctx, const std::set<std::string>& c);

// The largeness conditions the asymptotic constructions place on n_j,
// evaluated so users
// see which fail at desk scale. Condition (a) compares against the previous
// stage and is reported only when that data is supplied.
struct StageConditions {
  std::optional<bool> a;  // n_j > p_{j-1}(n_{j-1})
  bool b = false;
  bool c = false;  // gap variant only
  bool d = false;  // gap variant only
  std::uint64_t p_nj = 0;
  bool all_hold(bool gap_variant) const {
    bool rest = gap_variant ? (b && c && d) : b;
    return rest && a.value_or(true);
  }
};

struct PrevStage {
  std::size_t n_prev = 0;
  NatPoly p_prev;
};

// Gap variant: (b) r(n_j) >= p^4, (c) (2^{n_j} - p)/2 >= p^4,
// (d) p^3 - p >= p^2, with p = p_j(n_j).
StageConditions gap_stage_conditions(const StageContext& ctx,
                                     const std::optional<PrevStage>& prev = {});
// Acc variant: (b) 2^{n_j} - p > 6p + 1.
StageConditions acc_stage_conditions(const StageContext& ctx,
                                     const std::optional<PrevStage>& prev = {});

}  // namespace gaplab::diag

#endif  // GAPLAB_DIAG_STAGE_HPP_
