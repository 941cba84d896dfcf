#ifndef GAPLAB_POLYENC_ORACLE_MACHINE_HPP_
#define GAPLAB_POLYENC_ORACLE_MACHINE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/natpoly.hpp"

namespace gaplab::polyenc {

// Computation tree of a nondeterministic oracle machine: binary choices,
// oracle queries with yes/no subtrees, accept/reject leaves.
class QTree {
 public:
  enum class Kind : std::uint8_t { kChoice, kQuery, kAccept, kReject };

  struct Node {
    Kind kind;
    std::string query;  // kQuery
    std::shared_ptr<const Node> left, right;  // choice branches / yes, no
  };
  using NodePtr = std::shared_ptr<const Node>;

  QTree() : QTree(accept()) {}

  static QTree accept();
  static QTree reject();
  static QTree choice(QTree left, QTree right);
  static QTree query(std::string w, QTree yes, QTree no);

  const NodePtr& root() const { return root_; }
  // Longest root-to-leaf path counting both choices and queries as steps.
  std::uint64_t depth() const;

 private:
  explicit QTree(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

// A computation-path triple: nondeterministic choices plus the queries
// answered yes (Qplus) and no (Qminus) along the path.
struct ComputationPath {
  std::string choices;         // '0' = left, '1' = right, in order taken
  std::set<std::string> qplus;
  std::set<std::string> qminus;

  bool operator==(const ComputationPath& o) const {
    return choices == o.choices && qplus == o.qplus && qminus == o.qminus;
  }
  bool operator<(const ComputationPath& o) const;
};

struct SignedPath {
  ComputationPath path;
  int sign;  // +1 accepting, -1 rejecting
};

// Nondeterministic polynomial-time oracle machine over a declared, ordered
// query universe, with explicit per-input computation trees.
class OracleMachine {
 public:
  OracleMachine(std::string name, NatPoly time_bound, std::vector<std::string> universe,
                std::map<std::string, QTree> trees);

  const std::string& name() const { return name_; }
  const NatPoly& time_bound() const { return time_bound_; }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::map<std::string, QTree>& trees() const { return trees_; }

  const QTree& tree_for(const std::string& x) const;
  // Index of w in the universe, or -1.
  int universe_index(const std::string& w) const;

 private:
  std::string name_;
  NatPoly time_bound_;
  std::vector<std::string> universe_;
  std::map<std::string, QTree> trees_;
};

// Enumerates exactly the root-to-leaf traversals achievable under some
// oracle, in deterministic order (left/yes branches first). Throws
// ModelViolationError if any path queries a string twice.
std::vector<SignedPath> valid_paths(const OracleMachine& m, const std::string& x);

// Runs the tree under a concrete oracle: queries resolved by membership,
// choices counted both ways. Returns acc - rej.
BigInt oracle_gap(const OracleMachine& m, const std::set<std::string>& oracle,
                  const std::string& x);
// Accepting-path count under a concrete oracle.
BigInt oracle_acc(const OracleMachine& m, const std::set<std::string>& oracle,
                  const std::string& x);

// Whether rho is a computation path of the machine under this oracle:
// Qplus inside the oracle, Qminus outside it, and the choices replay to a
// leaf whose queried set is exactly Qplus and Qminus.
bool is_path_of(const OracleMachine& m, const std::string& x,
                const std::set<std::string>& oracle, const ComputationPath& rho);

}  // namespace gaplab::polyenc

#endif  // GAPLAB_POLYENC_ORACLE_MACHINE_HPP_
