#include "doctest.h"
#include "gaplab/errors.hpp"
#include "gaplab/fixtures.hpp"
#include "gaplab/gapcore/collapse.hpp"
#include "gaplab/io/dsl.hpp"
#include "gaplab/io/json_io.hpp"

using namespace gaplab;
using namespace gaplab::io;
using gapcore::GapProgram;
using gapcore::TargetMode;

TEST_CASE("sexpr reader") {
  auto e = parse_sexpr("(add (int 3) (int -2)) ; trailing comment");
  REQUIRE(e.is_form("add"));
  CHECK(e.arg(0, "t").is_form("int"));
  CHECK(e.arg(1, "t").arg(0, "t").as_int("t") == -2);

  auto s = parse_sexpr("(table ((\"a\\\"b\" 1)))");
  CHECK(s.arg(0, "t").items[0].items[0].as_string("t") == "a\"b");

  // Leading zeros must parse as decimal, never octal.
  CHECK(parse_sexpr("(int 09)").arg(0, "t").as_int("t") == 9);
  CHECK(parse_sexpr("(int -017)").arg(0, "t").as_int("t") == -17);
  CHECK(parse_sexpr("(int 000)").arg(0, "t").as_int("t") == 0);

  CHECK_THROWS_AS(parse_sexpr("(unclosed"), ParseError);
  CHECK_THROWS_AS(parse_sexpr(")"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(a) b"), ParseError);
  CHECK(parse_sexprs("(a) (b)").size() == 2);

  // Printer/reader round trip.
  auto printed = print_sexpr(e);
  auto reparsed = parse_sexpr(printed);
  CHECK(print_sexpr(reparsed) == printed);
}

TEST_CASE("DSL round trips evaluate identically") {
  fixtures::Rng rng(515);
  const Domain dom{"01", 3};
  for (int t = 0; t < 15; ++t) {
    // Table-backed promise fixtures serialize exactly.
    auto inst = fixtures::random_promise_instance(
        rng, dom, t % 2 ? TargetMode::kLengthIndexed : TargetMode::kInputIndexed,
        NatPoly::power_plus(1), false);

    auto prog_text = print_gap_program(inst.g);
    auto prog2 = parse_gap_program(prog_text);
    for (const std::string& x : dom.enumerate())
      CHECK(eval_gap(prog2, x) == eval_gap(inst.g, x));

    auto spec_text = print_sexpr(target_spec_to_sexpr(inst.spec)) + "\n";
    auto parsed = parse_spec_file(spec_text);
    REQUIRE(!parsed.two_sided);
    for (const std::string& x : dom.enumerate())
      CHECK(parsed.single.targets_for(x) == inst.spec.targets_for(x));
  }

  // A program exercising every combinator form.
  const char* text = R"DSL((add
    (const (domain "01" 3) (mul (len) (int 2)))
    (neg (prod (domain "01" 3) (poly 2) from1
      (sub (const (domain "01" 9) (idx))
           (compose (domain "01" 9) (chain first zerofill)
             (const (domain "01" 3) (int 1))))))))DSL";
  auto prog = parse_gap_program(text);
  auto round = parse_gap_program(print_gap_program(prog));
  for (const std::string& x : Domain{"01", 3}.enumerate())
    CHECK(eval_gap(round, x) == eval_gap(prog, x));
}

TEST_CASE("DSL machine form") {
  const char* text = R"DSL((base (machine m0 (domain "01" 1) (poly 1)
    (("" (choice accept reject))
     ("0" (choice accept accept))
     ("1" reject)))))DSL";
  auto prog = parse_gap_program(text);
  CHECK(eval_gap(prog, "") == 0);
  CHECK(eval_gap(prog, "0") == 2);
  CHECK(eval_gap(prog, "1") == -1);

  // Round trip through the printer.
  auto round = parse_gap_program(print_gap_program(prog));
  for (const std::string& x : Domain{"01", 1}.enumerate())
    CHECK(eval_gap(round, x) == eval_gap(prog, x));
}

TEST_CASE("two-sided DSL form") {
  const char* text = R"DSL((two-sided
    (target-spec length (domain "01" 2) (poly 1)
      (apply (int 3) (chain first)))
    (target-spec length (domain "01" 2) (poly 2)
      (sub (idx) (int 1)))))DSL";
  auto parsed = parse_spec_file(text);
  REQUIRE(parsed.two_sided);
  CHECK(parsed.both.accept.targets_for("01") == std::vector<BigInt>{3});
  CHECK(parsed.both.reject.targets_for("01") == std::vector<BigInt>{0, 1});
  CHECK_NOTHROW(parsed.both.validate_disjoint());

  auto round = parse_spec_file(print_sexpr(two_sided_to_sexpr(parsed.both)));
  CHECK(round.both.reject.targets_for("0") == parsed.both.reject.targets_for("0"));
}

TEST_CASE("JSON mirrors (gap programs and specs)") {
  fixtures::Rng rng(616);
  const Domain dom{"01", 2};
  auto inst = fixtures::random_promise_instance(rng, dom, TargetMode::kLengthIndexed,
                                                NatPoly::power_plus(1), false);
  auto j = gap_program_to_json(inst.g);
  auto prog2 = gap_program_from_json(j);
  for (const std::string& x : dom.enumerate())
    CHECK(eval_gap(prog2, x) == eval_gap(inst.g, x));

  auto sj = target_spec_to_json(inst.spec);
  auto spec2 = target_spec_from_json(sj);
  CHECK(spec2.targets_for("01") == inst.spec.targets_for("01"));

  auto two = fixtures::random_two_sided_instance(rng, dom, NatPoly::constant(2),
                                                 NatPoly::constant(2));
  auto tj = two_sided_to_json(two.spec);
  auto two2 = two_sided_from_json(tj);
  CHECK(two2.accept.targets_for("0") == two.spec.accept.targets_for("0"));
}

TEST_CASE("JSON oracle machines and stage fixtures") {
  using polyenc::QTree;
  QTree tree = QTree::query("x1", QTree::choice(QTree::accept(), QTree::reject()),
                            QTree::reject());
  polyenc::OracleMachine m("q", NatPoly::constant(2), {"x1"}, {{"", tree}});
  auto j = oracle_machine_to_json(m);
  auto m2 = oracle_machine_from_json(j);
  CHECK(m2.universe() == m.universe());
  CHECK(polyenc::oracle_gap(m2, {"x1"}, "") == polyenc::oracle_gap(m, {"x1"}, ""));
  CHECK(oracle_machine_to_json(m2) == j);

  auto dm = diag::DetMachine(
      diag::DetMachine::query("000", diag::DetMachine::leaf(7),
                              diag::DetMachine::leaf(1)),
      NatPoly::constant(1));
  StageFixture fixture{m, dm, 3, {"000"}, NatPoly::constant(2)};
  auto fj = stage_fixture_to_json(fixture);
  auto fixture2 = stage_fixture_from_json(fj);
  CHECK(fixture2.n_j == 3);
  CHECK(fixture2.b_prev == std::set<std::string>{"000"});
  CHECK(fixture2.m_machine.run({}).value == 1);
  CHECK(fixture2.m_machine.run({"000"}).value == 7);
}

TEST_CASE("JSON graphs, decks and reports") {
  using reconstruct::Deck;
  using reconstruct::Graph;
  Graph k3(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(graph_to_json(k3) == Json("Bw"));
  CHECK(graph_from_json(Json("Bw")) == k3);
  auto edge_form = Json{{"n", 3}, {"edges", Json::array({Json::array({1, 2})})}};
  CHECK(graph_from_json(edge_form).edge_count() == 1);

  Deck d = reconstruct::deck(k3);
  auto dj = deck_to_json(d);
  CHECK(deck_from_json(dj) == d);

  auto report = reconstruct::q_reconstruction_report(4, NatPoly::constant(1));
  auto rj = qrecon_report_to_json(report);
  CHECK(rj.at("max_pcount") == 2);
  CHECK(rj.at("violations") == 0);

  // Report serialization is byte-stable.
  CHECK(rj.dump() == qrecon_report_to_json(report).dump());
}

TEST_CASE("verify report JSON shape") {
  const Domain dom{"01", 1};
  auto spec = gapcore::single_target_spec(gapcore::FpFunc::constant(3),
                                          TargetMode::kLengthIndexed, dom);
  auto g = GapProgram::const_fp(gapcore::FpFunc::constant(4), dom);
  auto report = gapcore::verify_class_membership(
      g, spec, [](const std::string& x) { return x == "0"; },
      gapcore::CountingClass::kLWPP);
  auto j = verify_report_to_json(report);
  CHECK(j.at("ok") == false);
  REQUIRE(!j.at("violations").empty());
  const auto& v = j.at("violations").at(0);
  CHECK(v.contains("input"));
  CHECK(v.contains("gap"));
  CHECK(v.contains("expected"));
  CHECK(v.contains("verdict"));
}

TEST_CASE("compiler-built FP expressions survive serialization") {
  using namespace gaplab::gapcore;
  fixtures::Rng rng(2718);
  const Domain dom{"01", 2};
  auto inst = fixtures::random_promise_instance(rng, dom, TargetMode::kLengthIndexed,
                                                NatPoly::power_plus(1), false);
  auto witness = gapcore::collapse_lwpp(inst.g, inst.spec);
  // fhat stacks apply/zero-first/index-product nodes; its spec form must
  // round trip through both the DSL and JSON with identical targets.
  auto single = gapcore::single_target_spec(witness.fhat, TargetMode::kLengthIndexed, dom);
  auto via_dsl = parse_spec_file(print_sexpr(target_spec_to_sexpr(single)));
  auto via_json = target_spec_from_json(target_spec_to_json(single));
  for (const std::string& x : dom.enumerate()) {
    CHECK(via_dsl.single.targets_for(x) == single.targets_for(x));
    CHECK(via_json.targets_for(x) == single.targets_for(x));
  }

  auto two = fixtures::random_two_sided_instance(rng, dom, NatPoly::constant(2),
                                                 NatPoly::constant(2));
  auto chained = gapcore::collapse_two_sided(two.g, two.spec);
  // The chained fhat uses the repair-inner transform; round trip it too.
  auto round = target_spec_from_json(target_spec_to_json(chained.indexed));
  for (const std::string& x : dom.enumerate())
    CHECK(round.targets_for(x) == chained.indexed.targets_for(x));
}

TEST_CASE("sexpr reader only ever throws ParseError on garbage") {
  std::mt19937_64 rng(13);
  const std::string chars = "()\"\;ab01 \n-9";
  for (int t = 0; t < 500; ++t) {
    std::string text;
    const int len = static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) text.push_back(chars[rng() % chars.size()]);
    try {
      auto parsed = parse_sexprs(text);
      // Whatever parses must print and reparse identically.
      for (const auto& e : parsed) {
        auto round = parse_sexpr(print_sexpr(e));
        CHECK(print_sexpr(round) == print_sexpr(e));
      }
    } catch (const ParseError&) {
      // fine: malformed input
    }
  }
}
