#include "gaplab/gapcore/gap_program.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::gapcore {

namespace {

GapProgram::NodePtr make_node(GapProgram::Node n) {
  return std::make_shared<const GapProgram::Node>(std::move(n));
}

Domain merged_domain(const GapProgram& a, const GapProgram& b) {
  const Domain& da = a.domain();
  const Domain& db = b.domain();
  if (da.alphabet != db.alphabet)
    throw DomainError("gap programs combined over different alphabets");
  return Domain{da.alphabet, std::min(da.max_len, db.max_len)};
}

}  // namespace

GapProgram GapProgram::base(BaseMachinePtr machine) {
  Node n;
  n.kind = Kind::kBase;
  n.domain = machine->domain();
  n.machine = std::move(machine);
  return GapProgram(make_node(std::move(n)));
}

GapProgram GapProgram::base(BaseMachine machine) {
  return base(std::make_shared<const BaseMachine>(std::move(machine)));
}

GapProgram GapProgram::const_fp(FpFunc f, Domain domain) {
  Node n;
  n.kind = Kind::kConstFP;
  n.domain = std::move(domain);
  n.fp = std::move(f);
  return GapProgram(make_node(std::move(n)));
}

GapProgram GapProgram::neg(GapProgram a) {
  Node n;
  n.kind = Kind::kNeg;
  n.domain = a.domain();
  n.a = a.node_;
  return GapProgram(make_node(std::move(n)));
}

GapProgram GapProgram::add(GapProgram a, GapProgram b) {
  Node n;
  n.kind = Kind::kAdd;
  n.domain = merged_domain(a, b);
  n.a = a.node_;
  n.b = b.node_;
  return GapProgram(make_node(std::move(n)));
}

GapProgram GapProgram::sub(GapProgram a, GapProgram b) {
  Node n;
  n.kind = Kind::kSub;
  n.domain = merged_domain(a, b);
  n.a = a.node_;
  n.b = b.node_;
  return GapProgram(make_node(std::move(n)));
}

GapProgram GapProgram::mul(GapProgram a, GapProgram b) {
  Node n;
  n.kind = Kind::kMul;
  n.domain = merged_domain(a, b);
  n.a = a.node_;
  n.b = b.node_;
  return GapProgram(make_node(std::move(n)));
}

GapProgram GapProgram::poly_prod(GapProgram child, NatPoly range, RangeFrom from,
                                 Domain outer_domain) {
  if (child.domain().alphabet != outer_domain.alphabet)
    throw DomainError("poly product child uses a different alphabet");
  Node n;
  n.kind = Kind::kPolyProd;
  n.domain = std::move(outer_domain);
  n.a = child.node_;
  n.range = std::move(range);
  n.from = from;
  return GapProgram(make_node(std::move(n)));
}

GapProgram GapProgram::compose_fp(GapProgram child, StrFunc transform,
                                  Domain outer_domain) {
  if (child.domain().alphabet != outer_domain.alphabet)
    throw DomainError("composed child uses a different alphabet");
  Node n;
  n.kind = Kind::kComposeFP;
  n.domain = std::move(outer_domain);
  n.a = child.node_;
  n.transform = std::move(transform);
  return GapProgram(make_node(std::move(n)));
}

const Domain& GapProgram::domain() const {
  if (!node_) throw DomainError("empty gap program");
  return node_->domain;
}

BigInt GapProgram::eval(const std::string& x) const {
  if (!node_) throw DomainError("empty gap program");
  if (!node_->domain.contains(x))
    throw DomainError("input \"" + x + "\" outside gap program domain");
  return eval_raw(x);
}

BigInt GapProgram::eval_raw(const std::string& x) const {
  const Node& n = *node_;
  const Domain& dom = n.domain;
  switch (n.kind) {
    case Kind::kBase:
      return enumerate_paths(n.machine->tree(x)).gap();
    case Kind::kConstFP:
      return n.fp.eval(x, dom);
    case Kind::kNeg:
      return -GapProgram(n.a).eval_raw(x);
    case Kind::kAdd:
      return GapProgram(n.a).eval_raw(x) + GapProgram(n.b).eval_raw(x);
    case Kind::kSub:
      return GapProgram(n.a).eval_raw(x) - GapProgram(n.b).eval_raw(x);
    case Kind::kMul:
      return GapProgram(n.a).eval_raw(x) * GapProgram(n.b).eval_raw(x);
    case Kind::kPolyProd: {
      const std::uint64_t hi = n.range.eval(x.size());
      const std::uint64_t lo = n.from == RangeFrom::kZero ? 0 : 1;
      BigInt prod = 1;
      for (std::uint64_t i = lo; i <= hi; ++i)
        prod *= GapProgram(n.a).eval_raw(pair_encode(x, i, dom));
      return prod;
    }
    case Kind::kComposeFP:
      return GapProgram(n.a).eval_raw(n.transform.apply(x, dom));
  }
  throw DomainError("corrupt gap program node");
}

BigInt eval_gap(const GapProgram& prog, const std::string& x) { return prog.eval(x); }

GapProgram poly_product(GapProgram child, NatPoly q, Domain outer_domain,
                        RangeFrom from) {
  return GapProgram::poly_prod(std::move(child), std::move(q), from,
                               std::move(outer_domain));
}

namespace {

// Tree builder for realize(); mirrors eval_raw but produces choice trees.
ChoiceTree realize_tree(const GapProgram::NodePtr& node, const std::string& x) {
  using Kind = GapProgram::Kind;
  const GapProgram::Node& n = *node;
  const Domain& dom = n.domain;
  switch (n.kind) {
    case Kind::kBase:
      return n.machine->tree(x);
    case Kind::kConstFP:
      return ChoiceTree::with_gap(n.fp.eval(x, dom));
    case Kind::kNeg:
      return realize_tree(n.a, x).negated();
    case Kind::kAdd:
      return ChoiceTree::choice(realize_tree(n.a, x), realize_tree(n.b, x));
    case Kind::kSub:
      return ChoiceTree::choice(realize_tree(n.a, x), realize_tree(n.b, x).negated());
    case Kind::kMul:
      return realize_tree(n.a, x).product(realize_tree(n.b, x));
    case Kind::kPolyProd: {
      const std::uint64_t hi = n.range.eval(x.size());
      std::uint64_t lo = n.from == RangeFrom::kZero ? 0 : 1;
      ChoiceTree acc = ChoiceTree::with_gap(1);
      bool first = true;
      for (std::uint64_t i = lo; i <= hi; ++i) {
        ChoiceTree factor = realize_tree(n.a, pair_encode(x, i, dom));
        acc = first ? factor : acc.product(factor);
        first = false;
      }
      return acc;
    }
    case Kind::kComposeFP:
      return realize_tree(n.a, n.transform.apply(x, dom));
  }
  throw DomainError("corrupt gap program node");
}

}  // namespace

BaseMachine realize(const GapProgram& prog) {
  if (prog.empty()) throw DomainError("empty gap program");
  const Domain dom = prog.domain();
  // Declared bound from the realized trees themselves, maximized per length.
  std::uint64_t max_depth = 0;
  for (const std::string& x : dom.enumerate())
    max_depth = std::max(max_depth, realize_tree(prog.node(), x).depth());
  GapProgram::NodePtr node = prog.node();
  BaseMachine::TreeFn fn = [node](const std::string& x) {
    return realize_tree(node, x);
  };
  return BaseMachine("realized", dom, NatPoly::constant(max_depth), std::move(fn));
}

GapProgram acc_as_gap(BaseMachinePtr machine) {
  const BaseMachine& src = *machine;
  BaseMachine::TreeFn fn = [machine](const std::string& x) {
    // Reject leaves become balanced choices, so gap == acc.
    ChoiceTree balanced = ChoiceTree::choice(ChoiceTree::accept(), ChoiceTree::reject());
    ChoiceTree t = machine->tree(x);
    struct Graft {
      std::unordered_map<const ChoiceTree::Node*, ChoiceTree> memo;
      ChoiceTree on_reject;
      ChoiceTree run(const ChoiceTree::NodePtr& n) {
        switch (n->kind) {
          case ChoiceTree::Kind::kAccept:
            return ChoiceTree::accept();
          case ChoiceTree::Kind::kReject:
            return on_reject;
          case ChoiceTree::Kind::kChoice:
            break;
        }
        auto it = memo.find(n.get());
        if (it != memo.end()) return it->second;
        ChoiceTree out = ChoiceTree::choice(run(n->left), run(n->right));
        memo.emplace(n.get(), out);
        return out;
      }
    } graft{{}, balanced};
    return graft.run(t.root());
  };
  // One extra choice below each rejecting leaf.
  std::vector<std::uint64_t> coeffs = src.time_bound().coeffs();
  coeffs[0] += 1;
  return GapProgram::base(BaseMachine(src.name() + "#acc", src.domain(),
                                      NatPoly(std::move(coeffs)), std::move(fn)));
}

}  // namespace gaplab::gapcore
