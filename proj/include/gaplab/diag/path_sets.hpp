#ifndef GAPLAB_DIAG_PATH_SETS_HPP_
#define GAPLAB_DIAG_PATH_SETS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/polyenc/oracle_machine.hpp"

namespace gaplab::diag {

// Per-candidate accepting-path analysis: A_alpha is the set of accepting
// computation-path triples of N under B + {alpha}. Paths compare by full
// triple equality.
struct PathSetAnalysis {
  std::string input;
  std::set<std::string> base_oracle;
  // Accepting paths of N under base_oracle alone; the pairwise-disjointness
  // argument needs this empty.
  std::vector<polyenc::ComputationPath> base_accepting;
  bool disjointness_precondition() const { return base_accepting.empty(); }

  std::map<std::string, std::vector<polyenc::ComputationPath>> a_sets;
  // Candidate pairs whose A-sets share a triple.
  std::vector<std::pair<std::string, std::string>> intersecting_pairs;
};

// Computes A_alpha for every alpha in `universe` (candidates to add to the
// oracle) and reports all pairwise intersections.
PathSetAnalysis accepting_path_sets(const polyenc::OracleMachine& n,
                                    const std::set<std::string>& base_oracle,
                                    const std::vector<std::string>& universe,
                                    const std::string& x);

// conflicting(alpha): strings beta killing more than a third of A_alpha,
// i.e. at least floor(val/3) + 1 paths of A_alpha are not computation paths
// of N under B + {alpha, beta}. A path dies exactly when beta lands in its
// Qminus set. Precondition |A_alpha| = val; reported, not thrown.
struct ConflictingResult {
  bool precondition_ok = false;
  std::string reason;
  std::set<std::string> conflicting;
};

ConflictingResult conflicting_set(const PathSetAnalysis& analysis,
                                  const std::string& alpha, const BigInt& val);

// Cross-validation of the double-counting argument: when the analysis
// preconditions hold (no base accepting paths, every |A_alpha| = val), a
// pair of mutually non-conflicting candidates forces at least
// 2(val - floor(val/3)) > val accepting paths under both, so an exhaustive
// acc-stage search that finds nothing implies no such pair exists.
struct FreePairResult {
  bool preconditions_hold = false;
  std::optional<std::pair<std::string, std::string>> pair;
};

FreePairResult find_free_pair(const PathSetAnalysis& analysis, const BigInt& val);

}  // namespace gaplab::diag

#endif  // GAPLAB_DIAG_PATH_SETS_HPP_
