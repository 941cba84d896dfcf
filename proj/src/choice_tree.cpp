#include "gaplab/gapcore/choice_tree.hpp"

#include <unordered_map>

#include "gaplab/errors.hpp"

namespace gaplab::gapcore {

namespace {

ChoiceTree::NodePtr make_leaf(ChoiceTree::Kind kind) {
  auto n = std::make_shared<ChoiceTree::Node>();
  n->kind = kind;
  return n;
}

// Shared terminal leaves; every tree in the process reuses them.
const ChoiceTree::NodePtr& accept_node() {
  static const ChoiceTree::NodePtr node = make_leaf(ChoiceTree::Kind::kAccept);
  return node;
}

const ChoiceTree::NodePtr& reject_node() {
  static const ChoiceTree::NodePtr node = make_leaf(ChoiceTree::Kind::kReject);
  return node;
}

ChoiceTree::NodePtr make_choice(ChoiceTree::NodePtr l, ChoiceTree::NodePtr r) {
  auto n = std::make_shared<ChoiceTree::Node>();
  n->kind = ChoiceTree::Kind::kChoice;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

using NodeMemo = std::unordered_map<const ChoiceTree::Node*, ChoiceTree::NodePtr>;

ChoiceTree::NodePtr negate_node(const ChoiceTree::NodePtr& n, NodeMemo& memo) {
  switch (n->kind) {
    case ChoiceTree::Kind::kAccept:
      return reject_node();
    case ChoiceTree::Kind::kReject:
      return accept_node();
    case ChoiceTree::Kind::kChoice: {
      auto it = memo.find(n.get());
      if (it != memo.end()) return it->second;
      auto out = make_choice(negate_node(n->left, memo), negate_node(n->right, memo));
      memo.emplace(n.get(), out);
      return out;
    }
  }
  return n;
}

// Replaces Accept leaves by on_accept and Reject leaves by on_reject.
ChoiceTree::NodePtr graft(const ChoiceTree::NodePtr& n,
                          const ChoiceTree::NodePtr& on_accept,
                          const ChoiceTree::NodePtr& on_reject, NodeMemo& memo) {
  switch (n->kind) {
    case ChoiceTree::Kind::kAccept:
      return on_accept;
    case ChoiceTree::Kind::kReject:
      return on_reject;
    case ChoiceTree::Kind::kChoice: {
      auto it = memo.find(n.get());
      if (it != memo.end()) return it->second;
      auto out = make_choice(graft(n->left, on_accept, on_reject, memo),
                             graft(n->right, on_accept, on_reject, memo));
      memo.emplace(n.get(), out);
      return out;
    }
  }
  return n;
}

}  // namespace

ChoiceTree ChoiceTree::accept() { return ChoiceTree(accept_node()); }
ChoiceTree ChoiceTree::reject() { return ChoiceTree(reject_node()); }

ChoiceTree ChoiceTree::choice(ChoiceTree left, ChoiceTree right) {
  return ChoiceTree(make_choice(std::move(left.root_), std::move(right.root_)));
}

ChoiceTree ChoiceTree::with_gap(const BigInt& v) {
  // Chain length is |v|; keep realization of absurdly large constants from
  // silently allocating forever.
  static const BigInt kMaxMagnitude = BigInt(1) << 24;
  if (abs(v) > kMaxMagnitude)
    throw ResourceError("constant gap magnitude " + v.str() +
                        " too large to realize as a choice tree");
  ChoiceTree cur = choice(accept(), reject());
  const bool positive = v > 0;
  for (BigInt k = abs(v); k > 0; --k) cur = choice(leaf(positive), cur);
  return cur;
}

ChoiceTree ChoiceTree::negated() const {
  NodeMemo memo;
  return ChoiceTree(negate_node(root_, memo));
}

ChoiceTree ChoiceTree::product(const ChoiceTree& other) const {
  NodeMemo memo;
  ChoiceTree flipped = other.negated();
  return ChoiceTree(graft(root_, other.root_, flipped.root_, memo));
}

std::uint64_t ChoiceTree::depth() const {
  std::unordered_map<const Node*, std::uint64_t> memo;
  struct Rec {
    std::unordered_map<const Node*, std::uint64_t>& memo;
    std::uint64_t operator()(const NodePtr& n) {
      if (n->kind != Kind::kChoice) return 0;
      auto it = memo.find(n.get());
      if (it != memo.end()) return it->second;
      std::uint64_t d = 1 + std::max((*this)(n->left), (*this)(n->right));
      memo.emplace(n.get(), d);
      return d;
    }
  } rec{memo};
  return rec(root_);
}

PathCounts enumerate_paths(const ChoiceTree& tree) {
  std::unordered_map<const ChoiceTree::Node*, PathCounts> memo;
  struct Rec {
    std::unordered_map<const ChoiceTree::Node*, PathCounts>& memo;
    PathCounts operator()(const ChoiceTree::NodePtr& n) {
      switch (n->kind) {
        case ChoiceTree::Kind::kAccept:
          return {1, 0};
        case ChoiceTree::Kind::kReject:
          return {0, 1};
        case ChoiceTree::Kind::kChoice:
          break;
      }
      auto it = memo.find(n.get());
      if (it != memo.end()) return it->second;
      PathCounts l = (*this)(n->left);
      PathCounts r = (*this)(n->right);
      PathCounts out{l.acc + r.acc, l.rej + r.rej};
      memo.emplace(n.get(), out);
      return out;
    }
  } rec{memo};
  return rec(tree.root());
}

}  // namespace gaplab::gapcore
