#include "gaplab/io/dsl.hpp"

#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::io {

using gapcore::BaseMachine;
using gapcore::ChoiceTree;
using gapcore::FpFunc;
using gapcore::GapProgram;
using gapcore::RangeFrom;
using gapcore::RangeOf;
using gapcore::StrFunc;
using gapcore::StrStep;
using gapcore::TargetMode;
using gapcore::TargetSpec;
using gapcore::TwoSidedTargetSpec;

namespace {

std::uint64_t small_nat(const BigInt& v, const std::string& context) {
  if (v < 0 || v > BigInt(1) << 32)
    throw ParseError("value out of range in " + context);
  return v.convert_to<std::uint64_t>();
}

}  // namespace

NatPoly poly_from_sexpr(const SExpr& e) {
  if (e.is_form("rpoly")) {
    const std::uint64_t c = small_nat(e.arg(0, "rpoly").as_int("rpoly"), "rpoly");
    if (c < 1) throw ParseError("(rpoly c) requires c >= 1");
    return NatPoly::power_plus(c);
  }
  if (!e.is_form("poly")) throw ParseError("expected (poly ...) or (rpoly c)");
  std::vector<std::uint64_t> coeffs;
  for (std::size_t i = 0; i < e.arity(); ++i)
    coeffs.push_back(small_nat(e.arg(i, "poly").as_int("poly"), "poly"));
  if (coeffs.empty()) throw ParseError("(poly ...) needs at least one coefficient");
  return NatPoly(std::move(coeffs));
}

SExpr poly_to_sexpr(const NatPoly& p) {
  std::vector<SExpr> items{SExpr::atom("poly")};
  for (std::uint64_t c : p.coeffs()) items.push_back(SExpr::integer(BigInt(c)));
  return SExpr::list(std::move(items));
}

Domain domain_from_sexpr(const SExpr& e) {
  if (!e.is_form("domain")) throw ParseError("expected (domain ALPHABET MAXLEN)");
  Domain d;
  d.alphabet = e.arg(0, "domain").as_string("domain alphabet");
  if (d.alphabet.size() < 2) throw ParseError("domain alphabet needs >= 2 symbols");
  d.max_len = static_cast<std::size_t>(
      small_nat(e.arg(1, "domain").as_int("domain max length"), "domain"));
  return d;
}

SExpr domain_to_sexpr(const Domain& d) {
  return SExpr::list({SExpr::atom("domain"), SExpr::str(d.alphabet),
                      SExpr::integer(BigInt(d.max_len))});
}

StrFunc strfunc_from_sexpr(const SExpr& e) {
  if (!e.is_form("chain")) throw ParseError("expected (chain STEP ...)");
  std::vector<StrStep> steps;
  for (std::size_t i = 0; i < e.arity(); ++i) {
    const std::string& name = e.arg(i, "chain").as_atom("chain step");
    if (name == "first") steps.push_back(StrStep::kPairFirst);
    else if (name == "zerofill") steps.push_back(StrStep::kZeroFill);
    else if (name == "zero-first") steps.push_back(StrStep::kZeroFirst);
    else if (name == "repair-inner") steps.push_back(StrStep::kRepairInner);
    else throw ParseError("unknown string transform step '" + name + "'");
  }
  return StrFunc(std::move(steps));
}

SExpr strfunc_to_sexpr(const StrFunc& f) {
  std::vector<SExpr> items{SExpr::atom("chain")};
  for (StrStep step : f.steps()) {
    switch (step) {
      case StrStep::kPairFirst: items.push_back(SExpr::atom("first")); break;
      case StrStep::kZeroFill: items.push_back(SExpr::atom("zerofill")); break;
      case StrStep::kZeroFirst: items.push_back(SExpr::atom("zero-first")); break;
      case StrStep::kRepairInner: items.push_back(SExpr::atom("repair-inner")); break;
    }
  }
  return SExpr::list(std::move(items));
}

namespace {

RangeFrom from_atom(const SExpr& e) {
  const std::string& name = e.as_atom("range start");
  if (name == "from0") return RangeFrom::kZero;
  if (name == "from1") return RangeFrom::kOne;
  throw ParseError("expected from0 or from1, got '" + name + "'");
}

SExpr from_to_sexpr(RangeFrom from) {
  return SExpr::atom(from == RangeFrom::kZero ? "from0" : "from1");
}

RangeOf rangeof_atom(const SExpr& e) {
  const std::string& name = e.as_atom("range base");
  if (name == "input") return RangeOf::kInput;
  if (name == "first") return RangeOf::kFirst;
  throw ParseError("expected input or first, got '" + name + "'");
}

SExpr rangeof_to_sexpr(RangeOf r) {
  return SExpr::atom(r == RangeOf::kInput ? "input" : "first");
}

}  // namespace

FpFunc fpfunc_from_sexpr(const SExpr& e) {
  if (e.is_form("int")) return FpFunc::constant(e.arg(0, "int").as_int("int"));
  if (e.is_form("len")) return FpFunc::input_len();
  if (e.is_form("idx")) return FpFunc::pair_index();
  if (e.is_form("neg")) return FpFunc::neg(fpfunc_from_sexpr(e.arg(0, "neg")));
  if (e.is_form("add"))
    return FpFunc::add(fpfunc_from_sexpr(e.arg(0, "add")),
                       fpfunc_from_sexpr(e.arg(1, "add")));
  if (e.is_form("sub"))
    return FpFunc::sub(fpfunc_from_sexpr(e.arg(0, "sub")),
                       fpfunc_from_sexpr(e.arg(1, "sub")));
  if (e.is_form("mul"))
    return FpFunc::mul(fpfunc_from_sexpr(e.arg(0, "mul")),
                       fpfunc_from_sexpr(e.arg(1, "mul")));
  if (e.is_form("table")) {
    const SExpr& entries = e.arg(0, "table");
    if (entries.kind != SExpr::Kind::kList)
      throw ParseError("(table ...) expects a list of (KEY VALUE) pairs");
    std::map<std::string, BigInt> table;
    for (const SExpr& entry : entries.items) {
      if (entry.kind != SExpr::Kind::kList || entry.items.size() != 2)
        throw ParseError("table entries are (KEY VALUE) pairs");
      table[entry.items[0].as_string("table key")] =
          entry.items[1].as_int("table value");
    }
    std::optional<BigInt> fallback;
    if (e.arity() >= 2) {
      const SExpr& def = e.arg(1, "table");
      if (!def.is_form("default")) throw ParseError("expected (default V) in table");
      fallback = def.arg(0, "default").as_int("default value");
    }
    return FpFunc::table(std::move(table), std::move(fallback));
  }
  if (e.is_form("apply"))
    return FpFunc::apply(fpfunc_from_sexpr(e.arg(0, "apply")),
                         strfunc_from_sexpr(e.arg(1, "apply")));
  if (e.is_form("iprod")) {
    return FpFunc::index_product(
        fpfunc_from_sexpr(e.arg(0, "iprod")), poly_from_sexpr(e.arg(1, "iprod")),
        from_atom(e.arg(2, "iprod")), rangeof_atom(e.arg(3, "iprod")));
  }
  throw ParseError("unknown FP function form");
}

namespace {

SExpr fp_node_to_sexpr(const FpFunc::NodePtr& p) {
  using Kind = FpFunc::Kind;
  if (!p) throw ParseError("cannot print an empty FP function");
  const FpFunc::Node& n = *p;
  switch (n.kind) {
    case Kind::kConst:
      return SExpr::list({SExpr::atom("int"), SExpr::integer(n.value)});
    case Kind::kInputLen:
      return SExpr::list({SExpr::atom("len")});
    case Kind::kPairIndex:
      return SExpr::list({SExpr::atom("idx")});
    case Kind::kTable: {
      std::vector<SExpr> entries;
      for (const auto& [key, value] : n.table)
        entries.push_back(SExpr::list({SExpr::str(key), SExpr::integer(value)}));
      std::vector<SExpr> items{SExpr::atom("table"), SExpr::list(std::move(entries))};
      if (n.table_default)
        items.push_back(
            SExpr::list({SExpr::atom("default"), SExpr::integer(*n.table_default)}));
      return SExpr::list(std::move(items));
    }
    case Kind::kNeg:
      return SExpr::list({SExpr::atom("neg"), fp_node_to_sexpr(n.a)});
    case Kind::kAdd:
      return SExpr::list(
          {SExpr::atom("add"), fp_node_to_sexpr(n.a), fp_node_to_sexpr(n.b)});
    case Kind::kSub:
      return SExpr::list(
          {SExpr::atom("sub"), fp_node_to_sexpr(n.a), fp_node_to_sexpr(n.b)});
    case Kind::kMul:
      return SExpr::list(
          {SExpr::atom("mul"), fp_node_to_sexpr(n.a), fp_node_to_sexpr(n.b)});
    case Kind::kApply:
      return SExpr::list({SExpr::atom("apply"), fp_node_to_sexpr(n.a),
                          strfunc_to_sexpr(n.transform)});
    case Kind::kIndexProduct:
      return SExpr::list({SExpr::atom("iprod"), fp_node_to_sexpr(n.a),
                          poly_to_sexpr(n.range), from_to_sexpr(n.from),
                          rangeof_to_sexpr(n.range_of)});
  }
  throw ParseError("corrupt FP function node");
}

}  // namespace

SExpr fpfunc_to_sexpr(const FpFunc& f) { return fp_node_to_sexpr(f.node()); }

gapcore::ChoiceTree tree_from_sexpr(const SExpr& e) {
  if (e.is_atom("accept")) return ChoiceTree::accept();
  if (e.is_atom("reject")) return ChoiceTree::reject();
  if (e.is_form("choice"))
    return ChoiceTree::choice(tree_from_sexpr(e.arg(0, "choice")),
                              tree_from_sexpr(e.arg(1, "choice")));
  throw ParseError("expected accept, reject or (choice L R)");
}

SExpr tree_to_sexpr(const ChoiceTree& t) {
  // Printing unfolds shared subtrees, so cap the emitted node count.
  struct Rec {
    std::size_t budget = 1u << 20;
    SExpr run(const ChoiceTree::NodePtr& n) {
      if (budget-- == 0)
        throw ResourceError("choice tree too large to serialize");
      switch (n->kind) {
        case ChoiceTree::Kind::kAccept:
          return SExpr::atom("accept");
        case ChoiceTree::Kind::kReject:
          return SExpr::atom("reject");
        case ChoiceTree::Kind::kChoice:
          return SExpr::list({SExpr::atom("choice"), run(n->left), run(n->right)});
      }
      throw ParseError("corrupt choice tree");
    }
  } rec;
  return rec.run(t.root());
}

namespace {

BaseMachine machine_from_sexpr(const SExpr& e) {
  if (!e.is_form("machine"))
    throw ParseError("expected (machine NAME DOMAIN POLY ((INPUT TREE) ...))");
  std::string name = e.arg(0, "machine").as_atom("machine name");
  Domain dom = domain_from_sexpr(e.arg(1, "machine"));
  NatPoly bound = poly_from_sexpr(e.arg(2, "machine"));
  const SExpr& entries = e.arg(3, "machine");
  if (entries.kind != SExpr::Kind::kList)
    throw ParseError("machine table must be a list of (INPUT TREE) pairs");
  std::map<std::string, ChoiceTree> trees;
  for (const SExpr& entry : entries.items) {
    if (entry.kind != SExpr::Kind::kList || entry.items.size() != 2)
      throw ParseError("machine table entries are (INPUT TREE) pairs");
    trees.emplace(entry.items[0].as_string("machine input"),
                  tree_from_sexpr(entry.items[1]));
  }
  return BaseMachine::from_table(std::move(name), std::move(dom), std::move(bound),
                                 std::move(trees));
}

SExpr machine_to_sexpr(const BaseMachine& m, std::size_t max_table) {
  const auto inputs = m.domain().enumerate();
  if (inputs.size() > max_table)
    throw ResourceError("machine domain too large to materialize as a table");
  std::vector<SExpr> entries;
  for (const std::string& x : inputs)
    entries.push_back(SExpr::list({SExpr::str(x), tree_to_sexpr(m.tree(x))}));
  return SExpr::list({SExpr::atom("machine"), SExpr::atom(m.name()),
                      domain_to_sexpr(m.domain()), poly_to_sexpr(m.time_bound()),
                      SExpr::list(std::move(entries))});
}

}  // namespace

GapProgram gap_program_from_sexpr(const SExpr& e) {
  if (e.is_form("base"))
    return GapProgram::base(machine_from_sexpr(e.arg(0, "base")));
  if (e.is_form("const"))
    return GapProgram::const_fp(fpfunc_from_sexpr(e.arg(1, "const")),
                                domain_from_sexpr(e.arg(0, "const")));
  if (e.is_form("neg")) return GapProgram::neg(gap_program_from_sexpr(e.arg(0, "neg")));
  if (e.is_form("add"))
    return GapProgram::add(gap_program_from_sexpr(e.arg(0, "add")),
                           gap_program_from_sexpr(e.arg(1, "add")));
  if (e.is_form("sub"))
    return GapProgram::sub(gap_program_from_sexpr(e.arg(0, "sub")),
                           gap_program_from_sexpr(e.arg(1, "sub")));
  if (e.is_form("mul"))
    return GapProgram::mul(gap_program_from_sexpr(e.arg(0, "mul")),
                           gap_program_from_sexpr(e.arg(1, "mul")));
  if (e.is_form("prod"))
    return GapProgram::poly_prod(
        gap_program_from_sexpr(e.arg(3, "prod")), poly_from_sexpr(e.arg(1, "prod")),
        from_atom(e.arg(2, "prod")), domain_from_sexpr(e.arg(0, "prod")));
  if (e.is_form("compose"))
    return GapProgram::compose_fp(gap_program_from_sexpr(e.arg(2, "compose")),
                                  strfunc_from_sexpr(e.arg(1, "compose")),
                                  domain_from_sexpr(e.arg(0, "compose")));
  throw ParseError("unknown gap program form");
}

namespace {

SExpr gap_node_to_sexpr(const GapProgram::NodePtr& p, std::size_t max_table) {
  using Kind = GapProgram::Kind;
  if (!p) throw ParseError("cannot print an empty gap program");
  const GapProgram::Node& n = *p;
  switch (n.kind) {
    case Kind::kBase:
      return SExpr::list({SExpr::atom("base"), machine_to_sexpr(*n.machine, max_table)});
    case Kind::kConstFP:
      return SExpr::list({SExpr::atom("const"), domain_to_sexpr(n.domain),
                          fp_node_to_sexpr(n.fp.node())});
    case Kind::kNeg:
      return SExpr::list({SExpr::atom("neg"), gap_node_to_sexpr(n.a, max_table)});
    case Kind::kAdd:
      return SExpr::list({SExpr::atom("add"), gap_node_to_sexpr(n.a, max_table),
                          gap_node_to_sexpr(n.b, max_table)});
    case Kind::kSub:
      return SExpr::list({SExpr::atom("sub"), gap_node_to_sexpr(n.a, max_table),
                          gap_node_to_sexpr(n.b, max_table)});
    case Kind::kMul:
      return SExpr::list({SExpr::atom("mul"), gap_node_to_sexpr(n.a, max_table),
                          gap_node_to_sexpr(n.b, max_table)});
    case Kind::kPolyProd:
      return SExpr::list({SExpr::atom("prod"), domain_to_sexpr(n.domain),
                          poly_to_sexpr(n.range), from_to_sexpr(n.from),
                          gap_node_to_sexpr(n.a, max_table)});
    case Kind::kComposeFP:
      return SExpr::list({SExpr::atom("compose"), domain_to_sexpr(n.domain),
                          strfunc_to_sexpr(n.transform),
                          gap_node_to_sexpr(n.a, max_table)});
  }
  throw ParseError("corrupt gap program node");
}

}  // namespace

SExpr gap_program_to_sexpr(const GapProgram& g, std::size_t max_table) {
  return gap_node_to_sexpr(g.node(), max_table);
}

TargetSpec target_spec_from_sexpr(const SExpr& e) {
  if (!e.is_form("target-spec"))
    throw ParseError("expected (target-spec MODE DOMAIN POLY FP)");
  TargetSpec spec;
  const std::string& mode = e.arg(0, "target-spec").as_atom("target mode");
  if (mode == "length") spec.mode = TargetMode::kLengthIndexed;
  else if (mode == "input") spec.mode = TargetMode::kInputIndexed;
  else throw ParseError("target mode must be length or input");
  spec.domain = domain_from_sexpr(e.arg(1, "target-spec"));
  spec.multiplicity = poly_from_sexpr(e.arg(2, "target-spec"));
  spec.target = fpfunc_from_sexpr(e.arg(3, "target-spec"));
  return spec;
}

SExpr target_spec_to_sexpr(const TargetSpec& spec) {
  return SExpr::list(
      {SExpr::atom("target-spec"),
       SExpr::atom(spec.mode == TargetMode::kLengthIndexed ? "length" : "input"),
       domain_to_sexpr(spec.domain), poly_to_sexpr(spec.multiplicity),
       fpfunc_to_sexpr(spec.target)});
}

TwoSidedTargetSpec two_sided_from_sexpr(const SExpr& e) {
  if (!e.is_form("two-sided")) throw ParseError("expected (two-sided TSPEC TSPEC)");
  TwoSidedTargetSpec spec;
  spec.accept = target_spec_from_sexpr(e.arg(0, "two-sided"));
  spec.reject = target_spec_from_sexpr(e.arg(1, "two-sided"));
  return spec;
}

SExpr two_sided_to_sexpr(const TwoSidedTargetSpec& spec) {
  return SExpr::list({SExpr::atom("two-sided"), target_spec_to_sexpr(spec.accept),
                      target_spec_to_sexpr(spec.reject)});
}

GapProgram parse_gap_program(const std::string& text) {
  return gap_program_from_sexpr(parse_sexpr(text));
}

std::string print_gap_program(const GapProgram& g) {
  return print_sexpr(gap_program_to_sexpr(g)) + "\n";
}

ParsedSpec parse_spec_file(const std::string& text) {
  const SExpr e = parse_sexpr(text);
  ParsedSpec out;
  if (e.is_form("two-sided")) {
    out.two_sided = true;
    out.both = two_sided_from_sexpr(e);
  } else {
    out.single = target_spec_from_sexpr(e);
  }
  return out;
}

}  // namespace gaplab::io
