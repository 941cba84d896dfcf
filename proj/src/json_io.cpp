#include "gaplab/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gaplab/errors.hpp"
#include "gaplab/io/dsl.hpp"

namespace gaplab::io {

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

Json poly_to_json(const NatPoly& p) { return Json(p.coeffs()); }

NatPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : j) coeffs.push_back(c.get<std::uint64_t>());
  if (coeffs.empty()) throw ParseError("polynomial needs at least one coefficient");
  return NatPoly(std::move(coeffs));
}

Json domain_to_json(const Domain& d) {
  return Json{{"alphabet", d.alphabet}, {"max_len", d.max_len}};
}

Domain domain_from_json(const Json& j) {
  Domain d;
  d.alphabet = j.at("alphabet").get<std::string>();
  if (d.alphabet.size() < 2) throw ParseError("domain alphabet needs >= 2 symbols");
  d.max_len = j.at("max_len").get<std::size_t>();
  return d;
}

Json strfunc_to_json(const StrFunc& f) {
  Json steps = Json::array();
  for (StrStep step : f.steps()) {
    switch (step) {
      case StrStep::kPairFirst: steps.push_back("first"); break;
      case StrStep::kZeroFill: steps.push_back("zerofill"); break;
      case StrStep::kZeroFirst: steps.push_back("zero-first"); break;
      case StrStep::kRepairInner: steps.push_back("repair-inner"); break;
    }
  }
  return steps;
}

StrFunc strfunc_from_json(const Json& j) {
  std::vector<StrStep> steps;
  for (const auto& step : j) {
    const std::string name = step.get<std::string>();
    if (name == "first") steps.push_back(StrStep::kPairFirst);
    else if (name == "zerofill") steps.push_back(StrStep::kZeroFill);
    else if (name == "zero-first") steps.push_back(StrStep::kZeroFirst);
    else if (name == "repair-inner") steps.push_back(StrStep::kRepairInner);
    else throw ParseError("unknown string transform step '" + name + "'");
  }
  return StrFunc(std::move(steps));
}

Json fp_node_to_json(const FpFunc::NodePtr& p) {
  using Kind = FpFunc::Kind;
  if (!p) throw ParseError("cannot serialize an empty FP function");
  const FpFunc::Node& n = *p;
  switch (n.kind) {
    case Kind::kConst:
      return Json{{"kind", "const"}, {"value", n.value.str()}};
    case Kind::kInputLen:
      return Json{{"kind", "len"}};
    case Kind::kPairIndex:
      return Json{{"kind", "idx"}};
    case Kind::kTable: {
      Json entries = Json::array();
      for (const auto& [key, value] : n.table)
        entries.push_back(Json{{"key", key}, {"value", value.str()}});
      Json out{{"kind", "table"}, {"entries", entries}};
      if (n.table_default) out["default"] = n.table_default->str();
      return out;
    }
    case Kind::kNeg:
      return Json{{"kind", "neg"}, {"a", fp_node_to_json(n.a)}};
    case Kind::kAdd:
      return Json{{"kind", "add"}, {"a", fp_node_to_json(n.a)}, {"b", fp_node_to_json(n.b)}};
    case Kind::kSub:
      return Json{{"kind", "sub"}, {"a", fp_node_to_json(n.a)}, {"b", fp_node_to_json(n.b)}};
    case Kind::kMul:
      return Json{{"kind", "mul"}, {"a", fp_node_to_json(n.a)}, {"b", fp_node_to_json(n.b)}};
    case Kind::kApply:
      return Json{{"kind", "apply"},
                  {"a", fp_node_to_json(n.a)},
                  {"transform", strfunc_to_json(n.transform)}};
    case Kind::kIndexProduct:
      return Json{{"kind", "iprod"},
                  {"a", fp_node_to_json(n.a)},
                  {"range", poly_to_json(n.range)},
                  {"from", n.from == RangeFrom::kZero ? 0 : 1},
                  {"range_of", n.range_of == RangeOf::kInput ? "input" : "first"}};
  }
  throw ParseError("corrupt FP function node");
}

FpFunc fpfunc_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "const") return FpFunc::constant(parse_bigint(j.at("value").get<std::string>()));
  if (kind == "len") return FpFunc::input_len();
  if (kind == "idx") return FpFunc::pair_index();
  if (kind == "neg") return FpFunc::neg(fpfunc_from_json(j.at("a")));
  if (kind == "add")
    return FpFunc::add(fpfunc_from_json(j.at("a")), fpfunc_from_json(j.at("b")));
  if (kind == "sub")
    return FpFunc::sub(fpfunc_from_json(j.at("a")), fpfunc_from_json(j.at("b")));
  if (kind == "mul")
    return FpFunc::mul(fpfunc_from_json(j.at("a")), fpfunc_from_json(j.at("b")));
  if (kind == "table") {
    std::map<std::string, BigInt> table;
    for (const auto& entry : j.at("entries"))
      table[entry.at("key").get<std::string>()] =
          parse_bigint(entry.at("value").get<std::string>());
    std::optional<BigInt> fallback;
    if (j.contains("default")) fallback = parse_bigint(j.at("default").get<std::string>());
    return FpFunc::table(std::move(table), std::move(fallback));
  }
  if (kind == "apply")
    return FpFunc::apply(fpfunc_from_json(j.at("a")),
                         strfunc_from_json(j.at("transform")));
  if (kind == "iprod")
    return FpFunc::index_product(
        fpfunc_from_json(j.at("a")), poly_from_json(j.at("range")),
        j.at("from").get<int>() == 0 ? RangeFrom::kZero : RangeFrom::kOne,
        j.at("range_of").get<std::string>() == "first" ? RangeOf::kFirst
                                                       : RangeOf::kInput);
  throw ParseError("unknown FP function kind '" + kind + "'");
}

Json tree_to_json(const ChoiceTree& t) {
  // Printing unfolds shared subtrees, so cap the emitted node count.
  struct Rec {
    std::size_t budget = 1u << 20;
    Json run(const ChoiceTree::NodePtr& n) {
      if (budget-- == 0)
        throw ResourceError("choice tree too large to serialize");
      switch (n->kind) {
        case ChoiceTree::Kind::kAccept:
          return Json("accept");
        case ChoiceTree::Kind::kReject:
          return Json("reject");
        case ChoiceTree::Kind::kChoice:
          return Json{{"left", run(n->left)}, {"right", run(n->right)}};
      }
      throw ParseError("corrupt choice tree");
    }
  } rec;
  return rec.run(t.root());
}

ChoiceTree tree_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string leaf = j.get<std::string>();
    if (leaf == "accept") return ChoiceTree::accept();
    if (leaf == "reject") return ChoiceTree::reject();
    throw ParseError("unknown leaf '" + leaf + "'");
  }
  return ChoiceTree::choice(tree_from_json(j.at("left")), tree_from_json(j.at("right")));
}

Json machine_to_json(const gapcore::BaseMachine& m, std::size_t max_table) {
  const auto inputs = m.domain().enumerate();
  if (inputs.size() > max_table)
    throw ResourceError("machine domain too large to materialize as a table");
  Json trees = Json::object();
  for (const std::string& x : inputs) trees[x] = tree_to_json(m.tree(x));
  return Json{{"name", m.name()},
              {"domain", domain_to_json(m.domain())},
              {"time_poly", poly_to_json(m.time_bound())},
              {"trees", trees}};
}

gapcore::BaseMachine machine_from_json(const Json& j) {
  std::map<std::string, ChoiceTree> trees;
  for (const auto& [input, tree] : j.at("trees").items())
    trees.emplace(input, tree_from_json(tree));
  return gapcore::BaseMachine::from_table(
      j.at("name").get<std::string>(), domain_from_json(j.at("domain")),
      poly_from_json(j.at("time_poly")), std::move(trees));
}

Json gap_node_to_json(const GapProgram::NodePtr& p, std::size_t max_table) {
  using Kind = GapProgram::Kind;
  if (!p) throw ParseError("cannot serialize an empty gap program");
  const GapProgram::Node& n = *p;
  switch (n.kind) {
    case Kind::kBase:
      return Json{{"kind", "base"}, {"machine", machine_to_json(*n.machine, max_table)}};
    case Kind::kConstFP:
      return Json{{"kind", "const"},
                  {"domain", domain_to_json(n.domain)},
                  {"fp", fp_node_to_json(n.fp.node())}};
    case Kind::kNeg:
      return Json{{"kind", "neg"}, {"a", gap_node_to_json(n.a, max_table)}};
    case Kind::kAdd:
      return Json{{"kind", "add"},
                  {"a", gap_node_to_json(n.a, max_table)},
                  {"b", gap_node_to_json(n.b, max_table)}};
    case Kind::kSub:
      return Json{{"kind", "sub"},
                  {"a", gap_node_to_json(n.a, max_table)},
                  {"b", gap_node_to_json(n.b, max_table)}};
    case Kind::kMul:
      return Json{{"kind", "mul"},
                  {"a", gap_node_to_json(n.a, max_table)},
                  {"b", gap_node_to_json(n.b, max_table)}};
    case Kind::kPolyProd:
      return Json{{"kind", "prod"},
                  {"domain", domain_to_json(n.domain)},
                  {"range", poly_to_json(n.range)},
                  {"from", n.from == RangeFrom::kZero ? 0 : 1},
                  {"child", gap_node_to_json(n.a, max_table)}};
    case Kind::kComposeFP:
      return Json{{"kind", "compose"},
                  {"domain", domain_to_json(n.domain)},
                  {"transform", strfunc_to_json(n.transform)},
                  {"child", gap_node_to_json(n.a, max_table)}};
  }
  throw ParseError("corrupt gap program node");
}

}  // namespace

Json gap_program_to_json(const GapProgram& g, std::size_t max_table) {
  return gap_node_to_json(g.node(), max_table);
}

GapProgram gap_program_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "base") return GapProgram::base(machine_from_json(j.at("machine")));
  if (kind == "const")
    return GapProgram::const_fp(fpfunc_from_json(j.at("fp")),
                                domain_from_json(j.at("domain")));
  if (kind == "neg") return GapProgram::neg(gap_program_from_json(j.at("a")));
  if (kind == "add")
    return GapProgram::add(gap_program_from_json(j.at("a")),
                           gap_program_from_json(j.at("b")));
  if (kind == "sub")
    return GapProgram::sub(gap_program_from_json(j.at("a")),
                           gap_program_from_json(j.at("b")));
  if (kind == "mul")
    return GapProgram::mul(gap_program_from_json(j.at("a")),
                           gap_program_from_json(j.at("b")));
  if (kind == "prod")
    return GapProgram::poly_prod(
        gap_program_from_json(j.at("child")), poly_from_json(j.at("range")),
        j.at("from").get<int>() == 0 ? RangeFrom::kZero : RangeFrom::kOne,
        domain_from_json(j.at("domain")));
  if (kind == "compose")
    return GapProgram::compose_fp(gap_program_from_json(j.at("child")),
                                  strfunc_from_json(j.at("transform")),
                                  domain_from_json(j.at("domain")));
  throw ParseError("unknown gap program kind '" + kind + "'");
}

Json target_spec_to_json(const TargetSpec& spec) {
  return Json{
      {"mode", spec.mode == TargetMode::kLengthIndexed ? "length" : "input"},
      {"domain", domain_to_json(spec.domain)},
      {"multiplicity", poly_to_json(spec.multiplicity)},
      {"target", fp_node_to_json(spec.target.node())}};
}

TargetSpec target_spec_from_json(const Json& j) {
  TargetSpec spec;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "length") spec.mode = TargetMode::kLengthIndexed;
  else if (mode == "input") spec.mode = TargetMode::kInputIndexed;
  else throw ParseError("target mode must be length or input");
  spec.domain = domain_from_json(j.at("domain"));
  spec.multiplicity = poly_from_json(j.at("multiplicity"));
  spec.target = fpfunc_from_json(j.at("target"));
  return spec;
}

Json two_sided_to_json(const TwoSidedTargetSpec& spec) {
  return Json{{"accept", target_spec_to_json(spec.accept)},
              {"reject", target_spec_to_json(spec.reject)}};
}

TwoSidedTargetSpec two_sided_from_json(const Json& j) {
  TwoSidedTargetSpec spec;
  spec.accept = target_spec_from_json(j.at("accept"));
  spec.reject = target_spec_from_json(j.at("reject"));
  return spec;
}

Json verify_report_to_json(const gapcore::VerifyReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json expected = Json::array();
    for (const BigInt& t : v.expected) expected.push_back(t.str());
    violations.push_back(Json{{"input", v.input},
                              {"gap", v.gap.str()},
                              {"expected", expected},
                              {"verdict", v.verdict}});
  }
  return Json{{"class", gapcore::to_string(report.cls)},
              {"inputs_checked", report.inputs_checked},
              {"ok", report.ok()},
              {"violations", violations}};
}

namespace {

Json qtree_to_json(const polyenc::QTree::NodePtr& n) {
  using Kind = polyenc::QTree::Kind;
  switch (n->kind) {
    case Kind::kAccept:
      return Json("accept");
    case Kind::kReject:
      return Json("reject");
    case Kind::kChoice:
      return Json{{"kind", "choice"},
                  {"left", qtree_to_json(n->left)},
                  {"right", qtree_to_json(n->right)}};
    case Kind::kQuery:
      return Json{{"kind", "query"},
                  {"w", n->query},
                  {"yes", qtree_to_json(n->left)},
                  {"no", qtree_to_json(n->right)}};
  }
  throw ParseError("corrupt query tree");
}

polyenc::QTree qtree_from_json(const Json& j) {
  using polyenc::QTree;
  if (j.is_string()) {
    const std::string leaf = j.get<std::string>();
    if (leaf == "accept") return QTree::accept();
    if (leaf == "reject") return QTree::reject();
    throw ParseError("unknown leaf '" + leaf + "'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "choice")
    return QTree::choice(qtree_from_json(j.at("left")), qtree_from_json(j.at("right")));
  if (kind == "query")
    return QTree::query(j.at("w").get<std::string>(), qtree_from_json(j.at("yes")),
                        qtree_from_json(j.at("no")));
  throw ParseError("unknown query tree kind '" + kind + "'");
}

}  // namespace

Json oracle_machine_to_json(const polyenc::OracleMachine& m) {
  Json trees = Json::object();
  for (const auto& [input, tree] : m.trees()) trees[input] = qtree_to_json(tree.root());
  return Json{{"name", m.name()},
              {"time_poly", poly_to_json(m.time_bound())},
              {"universe", m.universe()},
              {"trees", trees}};
}

polyenc::OracleMachine oracle_machine_from_json(const Json& j) {
  std::map<std::string, polyenc::QTree> trees;
  for (const auto& [input, tree] : j.at("trees").items())
    trees.emplace(input, qtree_from_json(tree));
  return polyenc::OracleMachine(
      j.at("name").get<std::string>(), poly_from_json(j.at("time_poly")),
      j.at("universe").get<std::vector<std::string>>(), std::move(trees));
}

Json multilinear_to_json(const polyenc::MultilinearPoly& p) {
  Json monomials = Json::array();
  for (const auto& mono : p.factored()) {
    Json literals = Json::array();
    for (const auto& lit : mono.literals)
      literals.push_back(Json{{"var", lit.var}, {"positive", lit.positive}});
    monomials.push_back(Json{{"sign", mono.sign}, {"literals", literals}});
  }
  Json normal = Json::array();
  for (const auto& [vars, coeff] : p.normal_form()) {
    Json vs = Json::array();
    for (int i = 0; i < p.num_vars(); ++i)
      if ((vars >> i) & 1u) vs.push_back(i);
    normal.push_back(Json{{"vars", vs}, {"coeff", coeff.str()}});
  }
  return Json{{"num_vars", p.num_vars()},
              {"monomials", monomials},
              {"normal_form", normal},
              {"degree", p.degree()}};
}

Json encoding_report_to_json(const polyenc::EncodingReport& report) {
  Json mismatches = Json::array();
  for (const auto& mm : report.mismatches)
    mismatches.push_back(Json{{"oracle_mask", mm.oracle_mask},
                              {"poly", mm.poly_value.str()},
                              {"gap", mm.machine_gap.str()}});
  return Json{{"oracles_checked", report.oracles_checked},
              {"degree", report.degree},
              {"degree_bound", report.degree_bound},
              {"degree_ok", report.degree_ok},
              {"ok", report.ok()},
              {"mismatches", mismatches}};
}

Json graph_to_json(const reconstruct::Graph& g) {
  return Json(reconstruct::to_graph6(g));
}

reconstruct::Graph graph_from_json(const Json& j) {
  if (j.is_string()) return reconstruct::from_graph6(j.get<std::string>());
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return reconstruct::Graph(n, edges);
}

Json deck_to_json(const reconstruct::Deck& d) {
  Json cards = Json::array();
  for (const auto& card : d.cards()) cards.push_back(graph_to_json(card));
  return cards;
}

reconstruct::Deck deck_from_json(const Json& j) {
  const Json& cards = j.is_array() ? j : j.at("cards");
  std::vector<reconstruct::Graph> out;
  for (const auto& card : cards) out.push_back(graph_from_json(card));
  return reconstruct::Deck(std::move(out));
}

Json qrecon_report_to_json(const reconstruct::QReconReport& report) {
  Json levels = Json::array();
  for (const auto& level : report.levels) {
    Json histogram = Json::object();
    for (const auto& [count, classes] : level.histogram)
      histogram[std::to_string(count)] = classes;
    Json violations = Json::array();
    for (const auto& v : level.violations)
      violations.push_back(Json{{"deck", deck_to_json(v.deck)},
                                {"pcount", v.preimages},
                                {"q", v.bound}});
    levels.push_back(Json{{"n", level.n},
                          {"classes", level.classes},
                          {"max_pcount", level.max_pcount},
                          {"histogram", histogram},
                          {"violations", violations}});
  }
  return Json{{"max_pcount", report.max_pcount},
              {"violations", report.violation_count()},
              {"levels", levels}};
}

namespace {

Json det_node_to_json(const diag::DetMachine::NodePtr& n) {
  if (n->is_leaf) return Json{{"value", n->value.str()}};
  return Json{{"query", n->query},
              {"yes", det_node_to_json(n->yes)},
              {"no", det_node_to_json(n->no)}};
}

diag::DetMachine::NodePtr det_node_from_json(const Json& j) {
  using diag::DetMachine;
  if (j.contains("value")) return DetMachine::leaf(parse_bigint(j.at("value").get<std::string>()));
  return DetMachine::query(j.at("query").get<std::string>(),
                           det_node_from_json(j.at("yes")),
                           det_node_from_json(j.at("no")));
}

}  // namespace

Json det_machine_to_json(const diag::DetMachine& m) {
  return Json{{"time_poly", poly_to_json(m.time_bound())},
              {"tree", det_node_to_json(m.root())}};
}

diag::DetMachine det_machine_from_json(const Json& j) {
  return diag::DetMachine(det_node_from_json(j.at("tree")),
                          poly_from_json(j.at("time_poly")));
}

StageFixture stage_fixture_from_json(const Json& j) {
  StageFixture fixture{oracle_machine_from_json(j.at("n_machine")),
                       det_machine_from_json(j.at("m_machine")),
                       j.at("n_j").get<std::size_t>(),
                       {},
                       poly_from_json(j.at("r"))};
  for (const auto& w : j.at("b_prev")) fixture.b_prev.insert(w.get<std::string>());
  return fixture;
}

Json stage_fixture_to_json(const StageFixture& fixture) {
  return Json{{"n_machine", oracle_machine_to_json(fixture.n_machine)},
              {"m_machine", det_machine_to_json(fixture.m_machine)},
              {"n_j", fixture.n_j},
              {"b_prev", fixture.b_prev},
              {"r", poly_to_json(fixture.r)}};
}

Json stage_conditions_to_json(const diag::StageConditions& cond, bool gap_variant) {
  Json out{{"p_nj", cond.p_nj}};
  out["a"] = cond.a.has_value() ? Json(*cond.a) : Json(nullptr);
  out["b"] = cond.b;
  if (gap_variant) {
    out["c"] = cond.c;
    out["d"] = cond.d;
  }
  out["all_hold"] = cond.all_hold(gap_variant);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace gaplab::io
