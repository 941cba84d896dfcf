#include "gaplab/polyenc/oracle_machine.hpp"

#include <algorithm>
#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::polyenc {

namespace {

QTree::NodePtr make_qnode(QTree::Node n) {
  return std::make_shared<const QTree::Node>(std::move(n));
}

}  // namespace

QTree QTree::accept() {
  static const NodePtr node = make_qnode({Kind::kAccept, "", nullptr, nullptr});
  return QTree(node);
}

QTree QTree::reject() {
  static const NodePtr node = make_qnode({Kind::kReject, "", nullptr, nullptr});
  return QTree(node);
}

QTree QTree::choice(QTree left, QTree right) {
  return QTree(make_qnode({Kind::kChoice, "", std::move(left.root_),
                           std::move(right.root_)}));
}

QTree QTree::query(std::string w, QTree yes, QTree no) {
  return QTree(make_qnode({Kind::kQuery, std::move(w), std::move(yes.root_),
                           std::move(no.root_)}));
}

std::uint64_t QTree::depth() const {
  struct Rec {
    std::uint64_t operator()(const NodePtr& n) const {
      if (n->kind == Kind::kAccept || n->kind == Kind::kReject) return 0;
      return 1 + std::max((*this)(n->left), (*this)(n->right));
    }
  } rec;
  return rec(root_);
}

bool ComputationPath::operator<(const ComputationPath& o) const {
  if (choices != o.choices) return choices < o.choices;
  if (qplus != o.qplus) return qplus < o.qplus;
  return qminus < o.qminus;
}

OracleMachine::OracleMachine(std::string name, NatPoly time_bound,
                             std::vector<std::string> universe,
                             std::map<std::string, QTree> trees)
    : name_(std::move(name)),
      time_bound_(std::move(time_bound)),
      universe_(std::move(universe)),
      trees_(std::move(trees)) {
  std::set<std::string> seen;
  for (const std::string& w : universe_) {
    if (!seen.insert(w).second)
      throw ModelViolationError("universe lists \"" + w + "\" twice");
  }
}

const QTree& OracleMachine::tree_for(const std::string& x) const {
  auto it = trees_.find(x);
  if (it == trees_.end())
    throw DomainError("machine " + name_ + " has no tree for input \"" + x + "\"");
  return it->second;
}

int OracleMachine::universe_index(const std::string& w) const {
  auto it = std::find(universe_.begin(), universe_.end(), w);
  return it == universe_.end() ? -1 : static_cast<int>(it - universe_.begin());
}

namespace {

void walk_paths(const QTree::NodePtr& n, ComputationPath& cur,
                std::vector<SignedPath>& out) {
  switch (n->kind) {
    case QTree::Kind::kAccept:
      out.push_back({cur, +1});
      return;
    case QTree::Kind::kReject:
      out.push_back({cur, -1});
      return;
    case QTree::Kind::kChoice:
      cur.choices.push_back('0');
      walk_paths(n->left, cur, out);
      cur.choices.back() = '1';
      walk_paths(n->right, cur, out);
      cur.choices.pop_back();
      return;
    case QTree::Kind::kQuery: {
      if (cur.qplus.count(n->query) || cur.qminus.count(n->query))
        throw ModelViolationError("string \"" + n->query +
                                  "\" queried twice on one path");
      cur.qplus.insert(n->query);
      walk_paths(n->left, cur, out);
      cur.qplus.erase(n->query);
      cur.qminus.insert(n->query);
      walk_paths(n->right, cur, out);
      cur.qminus.erase(n->query);
      return;
    }
  }
}

}  // namespace

std::vector<SignedPath> valid_paths(const OracleMachine& m, const std::string& x) {
  std::vector<SignedPath> out;
  ComputationPath cur;
  walk_paths(m.tree_for(x).root(), cur, out);
  return out;
}

namespace {

void oracle_counts(const QTree::NodePtr& n, const std::set<std::string>& oracle,
                   BigInt& acc, BigInt& rej) {
  switch (n->kind) {
    case QTree::Kind::kAccept:
      ++acc;
      return;
    case QTree::Kind::kReject:
      ++rej;
      return;
    case QTree::Kind::kChoice:
      oracle_counts(n->left, oracle, acc, rej);
      oracle_counts(n->right, oracle, acc, rej);
      return;
    case QTree::Kind::kQuery:
      oracle_counts(oracle.count(n->query) ? n->left : n->right, oracle, acc, rej);
      return;
  }
}

}  // namespace

BigInt oracle_gap(const OracleMachine& m, const std::set<std::string>& oracle,
                  const std::string& x) {
  BigInt acc = 0, rej = 0;
  oracle_counts(m.tree_for(x).root(), oracle, acc, rej);
  return acc - rej;
}

BigInt oracle_acc(const OracleMachine& m, const std::set<std::string>& oracle,
                  const std::string& x) {
  BigInt acc = 0, rej = 0;
  oracle_counts(m.tree_for(x).root(), oracle, acc, rej);
  return acc;
}

bool is_path_of(const OracleMachine& m, const std::string& x,
                const std::set<std::string>& oracle, const ComputationPath& rho) {
  for (const std::string& w : rho.qplus)
    if (!oracle.count(w)) return false;
  for (const std::string& w : rho.qminus)
    if (oracle.count(w)) return false;
  // Replay the choices against the oracle and compare the queried sets.
  QTree::NodePtr node = m.tree_for(x).root();
  std::size_t next_choice = 0;
  std::set<std::string> queried;
  while (true) {
    switch (node->kind) {
      case QTree::Kind::kAccept:
      case QTree::Kind::kReject: {
        if (next_choice != rho.choices.size()) return false;
        std::set<std::string> expected = rho.qplus;
        expected.insert(rho.qminus.begin(), rho.qminus.end());
        return queried == expected;
      }
      case QTree::Kind::kChoice:
        if (next_choice >= rho.choices.size()) return false;
        node = rho.choices[next_choice] == '0' ? node->left : node->right;
        ++next_choice;
        break;
      case QTree::Kind::kQuery:
        queried.insert(node->query);
        node = oracle.count(node->query) ? node->left : node->right;
        break;
    }
  }
}

}  // namespace gaplab::polyenc
