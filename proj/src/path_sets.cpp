#include "gaplab/diag/path_sets.hpp"

#include <algorithm>

namespace gaplab::diag {

using polyenc::ComputationPath;
using polyenc::OracleMachine;
using polyenc::SignedPath;

namespace {

// Accepting path triples of N under a concrete oracle: valid paths filtered
// by Qplus inside the oracle and Qminus outside it.
std::vector<ComputationPath> accepting_under(const std::vector<SignedPath>& paths,
                                             const std::set<std::string>& oracle) {
  std::vector<ComputationPath> out;
  for (const SignedPath& sp : paths) {
    if (sp.sign != +1) continue;
    bool alive = std::all_of(sp.path.qplus.begin(), sp.path.qplus.end(),
                             [&](const std::string& w) { return oracle.count(w) > 0; }) &&
                 std::none_of(sp.path.qminus.begin(), sp.path.qminus.end(),
                              [&](const std::string& w) { return oracle.count(w) > 0; });
    if (alive) out.push_back(sp.path);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PathSetAnalysis accepting_path_sets(const OracleMachine& n,
                                    const std::set<std::string>& base_oracle,
                                    const std::vector<std::string>& universe,
                                    const std::string& x) {
  PathSetAnalysis analysis;
  analysis.input = x;
  analysis.base_oracle = base_oracle;
  const auto paths = polyenc::valid_paths(n, x);
  analysis.base_accepting = accepting_under(paths, base_oracle);
  for (const std::string& alpha : universe) {
    std::set<std::string> oracle = base_oracle;
    oracle.insert(alpha);
    analysis.a_sets.emplace(alpha, accepting_under(paths, oracle));
  }
  for (auto it1 = analysis.a_sets.begin(); it1 != analysis.a_sets.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != analysis.a_sets.end(); ++it2) {
      const bool intersects =
          std::find_first_of(it1->second.begin(), it1->second.end(),
                             it2->second.begin(), it2->second.end()) !=
          it1->second.end();
      if (intersects) analysis.intersecting_pairs.emplace_back(it1->first, it2->first);
    }
  }
  return analysis;
}

ConflictingResult conflicting_set(const PathSetAnalysis& analysis,
                                  const std::string& alpha, const BigInt& val) {
  ConflictingResult res;
  auto it = analysis.a_sets.find(alpha);
  if (it == analysis.a_sets.end()) {
    res.reason = "alpha not in the analyzed universe";
    return res;
  }
  if (BigInt(it->second.size()) != val) {
    res.reason = "|A_alpha| = " + std::to_string(it->second.size()) +
                 " differs from val = " + val.str();
    return res;
  }
  res.precondition_ok = true;
  const BigInt threshold = val / 3 + 1;
  // A path of A_alpha survives beta exactly when beta avoids its Qminus set,
  // so count kills per beta directly from the Qminus sets.
  std::map<std::string, BigInt> kills;
  for (const ComputationPath& rho : it->second)
    for (const std::string& beta : rho.qminus) ++kills[beta];
  for (const auto& [beta, killed] : kills) {
    if (analysis.a_sets.count(beta) == 0) continue;  // betas range over the universe
    if (killed >= threshold) res.conflicting.insert(beta);
  }
  return res;
}

FreePairResult find_free_pair(const PathSetAnalysis& analysis, const BigInt& val) {
  FreePairResult res;
  if (!analysis.disjointness_precondition()) return res;
  for (const auto& [alpha, a_set] : analysis.a_sets)
    if (BigInt(a_set.size()) != val) return res;
  res.preconditions_hold = true;
  std::map<std::string, ConflictingResult> conflicts;
  for (const auto& [alpha, a_set] : analysis.a_sets)
    conflicts.emplace(alpha, conflicting_set(analysis, alpha, val));
  for (auto it1 = analysis.a_sets.begin(); it1 != analysis.a_sets.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != analysis.a_sets.end(); ++it2) {
      const bool mutual_free =
          conflicts.at(it1->first).conflicting.count(it2->first) == 0 &&
          conflicts.at(it2->first).conflicting.count(it1->first) == 0;
      if (mutual_free) {
        res.pair = std::make_pair(it1->first, it2->first);
        return res;
      }
    }
  }
  return res;
}

}  // namespace gaplab::diag
