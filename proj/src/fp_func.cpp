#include "gaplab/gapcore/fp_func.hpp"

#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::gapcore {

StrFunc StrFunc::then(StrStep next) const {
  std::vector<StrStep> steps = steps_;
  steps.push_back(next);
  return StrFunc(std::move(steps));
}

std::string StrFunc::apply(const std::string& x, const Domain& dom) const {
  std::string cur = x;
  for (StrStep step : steps_) {
    switch (step) {
      case StrStep::kPairFirst:
        cur = pair_decode(cur, dom).first;
        break;
      case StrStep::kZeroFill:
        cur = dom.zeroes(cur.size());
        break;
      case StrStep::kZeroFirst: {
        PairParts p = pair_decode(cur, dom);
        cur = pair_encode(dom.zeroes(p.first.size()), p.index, dom);
        break;
      }
      case StrStep::kRepairInner: {
        PairParts outer = pair_decode(cur, dom);
        PairParts inner = pair_decode(outer.first, dom);
        cur = pair_encode(inner.first, outer.index, dom);
        break;
      }
    }
  }
  return cur;
}

namespace {
FpFunc::NodePtr make_node(FpFunc::Node n) {
  return std::make_shared<const FpFunc::Node>(std::move(n));
}
}  // namespace

FpFunc FpFunc::constant(BigInt v) {
  Node n;
  n.kind = Kind::kConst;
  n.value = std::move(v);
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::input_len() {
  Node n;
  n.kind = Kind::kInputLen;
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::pair_index() {
  Node n;
  n.kind = Kind::kPairIndex;
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::table(std::map<std::string, BigInt> entries,
                     std::optional<BigInt> fallback) {
  Node n;
  n.kind = Kind::kTable;
  n.table = std::move(entries);
  n.table_default = std::move(fallback);
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::neg(FpFunc a) {
  Node n;
  n.kind = Kind::kNeg;
  n.a = a.node_;
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::add(FpFunc a, FpFunc b) {
  Node n;
  n.kind = Kind::kAdd;
  n.a = a.node_;
  n.b = b.node_;
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::sub(FpFunc a, FpFunc b) {
  Node n;
  n.kind = Kind::kSub;
  n.a = a.node_;
  n.b = b.node_;
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::mul(FpFunc a, FpFunc b) {
  Node n;
  n.kind = Kind::kMul;
  n.a = a.node_;
  n.b = b.node_;
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::apply(FpFunc a, StrFunc transform) {
  Node n;
  n.kind = Kind::kApply;
  n.a = a.node_;
  n.transform = std::move(transform);
  return FpFunc(make_node(std::move(n)));
}

FpFunc FpFunc::index_product(FpFunc child, NatPoly range, RangeFrom from,
                             RangeOf range_of) {
  Node n;
  n.kind = Kind::kIndexProduct;
  n.a = child.node_;
  n.range = std::move(range);
  n.from = from;
  n.range_of = range_of;
  return FpFunc(make_node(std::move(n)));
}

BigInt FpFunc::eval(const std::string& x, const Domain& dom) const {
  if (!node_) throw DomainError("evaluating empty FP function");
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kConst:
      return n.value;
    case Kind::kInputLen:
      return BigInt(x.size());
    case Kind::kPairIndex:
      return BigInt(pair_decode(x, dom).index);
    case Kind::kTable: {
      auto it = n.table.find(x);
      if (it != n.table.end()) return it->second;
      if (n.table_default) return *n.table_default;
      throw DomainError("input \"" + x + "\" outside FP table domain");
    }
    case Kind::kNeg:
      return -FpFunc(n.a).eval(x, dom);
    case Kind::kAdd:
      return FpFunc(n.a).eval(x, dom) + FpFunc(n.b).eval(x, dom);
    case Kind::kSub:
      return FpFunc(n.a).eval(x, dom) - FpFunc(n.b).eval(x, dom);
    case Kind::kMul:
      return FpFunc(n.a).eval(x, dom) * FpFunc(n.b).eval(x, dom);
    case Kind::kApply:
      return FpFunc(n.a).eval(n.transform.apply(x, dom), dom);
    case Kind::kIndexProduct: {
      std::uint64_t base_len = x.size();
      if (n.range_of == RangeOf::kFirst) base_len = pair_decode(x, dom).first.size();
      const std::uint64_t hi = n.range.eval(base_len);
      const std::uint64_t lo = n.from == RangeFrom::kZero ? 0 : 1;
      // No zero short-circuit: every factor is evaluated, so a partial table
      // surfaces as a domain error instead of being masked by a zero.
      BigInt prod = 1;
      for (std::uint64_t i = lo; i <= hi; ++i)
        prod *= FpFunc(n.a).eval(pair_encode(x, i, dom), dom);
      return prod;
    }
  }
  throw DomainError("corrupt FP function node");
}

}  // namespace gaplab::gapcore
