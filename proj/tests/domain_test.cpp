#include <set>

#include "doctest.h"
#include "gaplab/domain.hpp"
#include "gaplab/errors.hpp"
#include "gaplab/gapcore/base_machine.hpp"
#include "gaplab/natpoly.hpp"

using namespace gaplab;

TEST_CASE("domain enumeration order") {
  const Domain dom{"01", 2};
  CHECK(dom.enumerate() ==
        std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"});
  CHECK(dom.enumerate_length(0) == std::vector<std::string>{""});
  CHECK(dom.contains("01"));
  CHECK(!dom.contains("012"));
  CHECK(!dom.contains("000"));

  const Domain abc{"abc", 2};
  CHECK(abc.enumerate_length(1) == std::vector<std::string>{"a", "b", "c"});
  CHECK(abc.enumerate().size() == 1 + 3 + 9);
}

TEST_CASE("pairing is injective, ordered and nestable") {
  const Domain dom{"01", 6};

  // Round trips, including empty first components and index 0.
  for (const std::string& x : {std::string(""), std::string("1"), std::string("10"),
                               std::string("0011")}) {
    for (std::uint64_t i = 0; i <= 5; ++i) {
      auto parts = pair_decode(pair_encode(x, i, dom), dom);
      CHECK(parts.first == x);
      CHECK(parts.index == i);
    }
  }

  // Injectivity over a sweep of (x, i) pairs.
  std::set<std::string> seen;
  for (const std::string& x : dom.enumerate()) {
    for (std::uint64_t i = 0; i <= 4; ++i)
      CHECK(seen.insert(pair_encode(x, i, dom)).second);
  }

  // Order preservation in the index: longer encoding, prefix order.
  const std::string a = pair_encode("01", 2, dom);
  const std::string b = pair_encode("01", 5, dom);
  CHECK(a.size() < b.size());
  CHECK(b.substr(0, a.size()) == a);

  // Nesting decodes outer-first.
  const std::string inner = pair_encode("10", 3, dom);
  const std::string outer = pair_encode(inner, 2, dom);
  auto parts = pair_decode(outer, dom);
  CHECK(parts.first == inner);
  CHECK(parts.index == 2);
  CHECK(pair_decode(parts.first, dom).first == "10");

  // Decode rejects non-pairs.
  CHECK(!is_pair("", dom));
  CHECK(!is_pair("1", dom));         // run of ones with no delimiter
  CHECK(!is_pair("1100", dom));      // truncated first component? "11"+"0"+"0" len mismatch
  CHECK_THROWS_AS(pair_decode("11", dom), DomainError);
}

TEST_CASE("NatPoly") {
  CHECK(NatPoly::constant(3).eval(100) == 3);
  CHECK(NatPoly({2, 0, 1}).eval(5) == 27);  // 2 + n^2
  CHECK(NatPoly::power_plus(2).eval(5) == 27);
  CHECK(NatPoly::power_plus(1).eval(0) == 1);
  CHECK(NatPoly::power_plus(2).to_string() == "n^2 + 2");
  CHECK(NatPoly({0, 1}).to_string() == "n");
  CHECK(NatPoly({5}).to_string() == "5");
  // Trailing zero coefficients normalize away.
  CHECK(NatPoly({1, 0, 0}) == NatPoly({1}));
  CHECK(NatPoly().is_zero());
}

TEST_CASE("time bound checking") {
  using gapcore::BaseMachine;
  using gapcore::ChoiceTree;
  const Domain dom{"01", 1};
  // Depth-2 tree under a bound of 1: flagged.
  auto deep = ChoiceTree::choice(
      ChoiceTree::choice(ChoiceTree::accept(), ChoiceTree::reject()),
      ChoiceTree::reject());
  BaseMachine bad("bad", dom, NatPoly::constant(1),
                  [deep](const std::string&) { return deep; });
  auto offender = bad.check_time_bound();
  REQUIRE(offender.has_value());
  CHECK(*offender == "");

  BaseMachine good("good", dom, NatPoly::constant(2),
                   [deep](const std::string&) { return deep; });
  CHECK(!good.check_time_bound().has_value());
}
