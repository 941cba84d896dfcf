#ifndef GAPLAB_GAPCORE_CHOICE_TREE_HPP_
#define GAPLAB_GAPCORE_CHOICE_TREE_HPP_

#include <cstdint>
#include <memory>
#include <utility>

#include "gaplab/bigint.hpp"

namespace gaplab::gapcore {

// Bounded nondeterministic computation tree: internal nodes are binary
// choices, leaves accept or reject. Immutable value with structural sharing;
// machine transformations (negation, products) produce DAGs whose unfolding
// is the tree, and all counting is done over the unfolding.
class ChoiceTree {
 public:
  enum class Kind : std::uint8_t { kChoice, kAccept, kReject };

  struct Node {
    Kind kind;
    std::shared_ptr<const Node> left, right;
  };
  using NodePtr = std::shared_ptr<const Node>;

  ChoiceTree() : ChoiceTree(accept()) {}

  static ChoiceTree accept();
  static ChoiceTree reject();
  static ChoiceTree choice(ChoiceTree left, ChoiceTree right);
  static ChoiceTree leaf(bool accepting) { return accepting ? accept() : reject(); }

  // Deterministic tree with gap exactly v: |v| unbalanced leaves of sign(v)
  // chained beside one balanced Choice(Accept, Reject) pad.
  static ChoiceTree with_gap(const BigInt& v);

  const NodePtr& root() const { return root_; }
  bool is_leaf() const { return root_->kind != Kind::kChoice; }

  // Accept/Reject labels swapped everywhere.
  ChoiceTree negated() const;
  // Second tree grafted at every leaf of this one; a grafted leaf accepts
  // iff the two leaf signs agree, so the gap multiplies.
  ChoiceTree product(const ChoiceTree& other) const;

  // Number of binary choices on the deepest root-to-leaf path.
  std::uint64_t depth() const;

 private:
  explicit ChoiceTree(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

struct PathCounts {
  BigInt acc;
  BigInt rej;
  BigInt gap() const { return acc - rej; }
  BigInt leaves() const { return acc + rej; }
};

// Counts accepting and rejecting computation paths by exhaustive traversal
// of the unfolded tree (memoized over shared nodes, so exact counts stay
// cheap even for product constructions).
PathCounts enumerate_paths(const ChoiceTree& tree);

}  // namespace gaplab::gapcore

#endif  // GAPLAB_GAPCORE_CHOICE_TREE_HPP_
