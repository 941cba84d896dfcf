#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gaplab/errors.hpp"
#include "gaplab/reconstruct/deck.hpp"
#include "gaplab/reconstruct/graph.hpp"
#include "gaplab/gapcore/collapse.hpp"
#include "gaplab/gapcore/verify.hpp"
#include "gaplab/reconstruct/padded.hpp"

using namespace gaplab;
using namespace gaplab::reconstruct;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph path3() { return Graph(3, {{1, 2}, {2, 3}}); }

// Brute-force class count: canonicalize every labeled graph on n vertices.
std::set<Graph> brute_force_classes(int n) {
  std::set<Graph> classes;
  const int total = n * (n - 1) / 2;
  for (std::uint32_t bits = 0; bits < (1u << total); ++bits)
    classes.insert(canonical_form(Graph(n, bits)));
  return classes;
}

// Brute-force preimage count, independent of the memoized deck index.
std::uint64_t brute_pcount(const Deck& d) {
  if (d.empty()) return 1;
  const int n = d.card_vertices() + 1;
  std::uint64_t count = 0;
  for (const Graph& g : brute_force_classes(n))
    if (deck(g) == d) ++count;
  return count;
}

}  // namespace

TEST_CASE("delete_vertex") {
  // Any deletion from K3 gives K2.
  for (int k = 1; k <= 3; ++k) {
    Graph card = delete_vertex(complete(3), k);
    CHECK(card.vertex_count() == 2);
    CHECK(card.edge_count() == 1);
  }
  // Deleting the middle of a path isolates the ends.
  Graph mid = delete_vertex(path3(), 2);
  CHECK(mid.vertex_count() == 2);
  CHECK(mid.edge_count() == 0);
  // Endpoint deletion keeps one edge.
  CHECK(delete_vertex(path3(), 1).edge_count() == 1);
  // Single vertex -> empty graph.
  CHECK(delete_vertex(Graph(1), 1).vertex_count() == 0);
  CHECK_THROWS_AS(delete_vertex(Graph(2), 3), DomainError);
}

TEST_CASE("canonical form and isomorphism") {
  // Any relabeling of a graph is isomorphic to it.
  Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
  Graph relabeled(4, {{4, 3}, {3, 1}, {1, 2}});  // same path, new labels
  CHECK(is_isomorphic(g, relabeled));
  CHECK(canonical_form(g) == canonical_form(relabeled));

  // K2+K1 vs P3: equal vertex counts, different edge counts.
  CHECK(!is_isomorphic(Graph(3, {{1, 2}}), path3()));

  // All 4 labeled graphs on 2 vertices collapse to 2 classes.
  std::set<Graph> classes;
  for (std::uint32_t bits = 0; bits < 2; ++bits)
    classes.insert(canonical_form(Graph(2, bits)));
  CHECK(classes.size() == 2);

  // Canonicalization is idempotent and stays in the class.
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    int n = static_cast<int>(rng() % 6) + 1;
    Graph random(n, static_cast<std::uint32_t>(rng()) &
                        ((1u << (n * (n - 1) / 2)) - 1u));
    Graph canon = canonical_form(random);
    CHECK(canonical_form(canon) == canon);
    CHECK(is_isomorphic(random, canon));
    CHECK(canon.degree_sequence() == random.degree_sequence());
  }
}

TEST_CASE("enumerate_graphs counts match brute force") {
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 5; ++n) {
    CHECK(enumerate_graphs(n).size() == expected[static_cast<std::size_t>(n)]);
    CHECK(brute_force_classes(n).size() == expected[static_cast<std::size_t>(n)]);
  }
  CHECK(enumerate_graphs(6).size() == expected[6]);
  CHECK(enumerate_graphs(7).size() == expected[7]);
  CHECK_THROWS_AS(enumerate_graphs(9), ResourceError);
  CHECK_THROWS_AS(enumerate_graphs(8, 7), ResourceError);

  // Representatives are canonical, unique and sorted.
  const auto& level4 = enumerate_graphs(4);
  for (std::size_t i = 0; i < level4.size(); ++i) {
    CHECK(canonical_form(level4[i]) == level4[i]);
    if (i > 0) CHECK(level4[i - 1] < level4[i]);
  }
}

TEST_CASE("deck") {
  Deck k3 = deck(complete(3));
  CHECK(k3.size() == 3);
  for (const Graph& card : k3.cards()) CHECK(card.edge_count() == 1);

  // P3's deck: K2, K2... no — one K2 from each endpoint deletion and one
  // empty card from the middle.
  Deck p3 = deck(path3());
  CHECK(p3.size() == 3);
  int empty_cards = 0, edge_cards = 0;
  for (const Graph& card : p3.cards())
    card.edge_count() == 0 ? ++empty_cards : ++edge_cards;
  CHECK(empty_cards == 1);
  CHECK(edge_cards == 2);

  Deck edgeless = deck(Graph(3));
  CHECK(edgeless.size() == 3);
  for (const Graph& card : edgeless.cards()) CHECK(card.edge_count() == 0);

  CHECK_THROWS_AS(Deck({Graph(2), Graph(3)}), InvalidDeckError);
}

TEST_CASE("pcount on the named fixtures") {
  // Both 2-vertex graphs share the deck <K1, K1>.
  Deck two(std::vector<Graph>{Graph(1), Graph(1)});
  CHECK(pcount(two) == 2);
  CHECK(brute_pcount(two) == 2);

  // <K2, K2, K2> has exactly K3.
  Deck triangle(std::vector<Graph>{complete(2), complete(2), complete(2)});
  CHECK(pcount(triangle) == 1);
  CHECK(brute_pcount(triangle) == 1);

  // <K3, 3K1, 3K1, 3K1>: edge sum 3 is not divisible by n-2 = 2.
  Deck bogus(std::vector<Graph>{complete(3), Graph(3), Graph(3), Graph(3)});
  CHECK(pcount(bogus) == 0);
  CHECK(brute_pcount(bogus) == 0);
  CHECK(!is_legitimate(bogus));

  // <K2, 2K1, 2K1> has the preimage K2 + K1.
  Deck mixed(std::vector<Graph>{complete(2), Graph(2), Graph(2)});
  CHECK(pcount(mixed) == 1);
  CHECK(is_legitimate(mixed));
  CHECK(brute_pcount(mixed) == 1);

  // Every graph is a preimage of its own deck.
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n)) CHECK(pcount(deck(g)) >= 1);
}

TEST_CASE("edge count law and prefilter agreement") {
  // Kelly's law on real decks.
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(deck(g).total_card_edges() == (n - 2) * g.edge_count());
    }
  }
  // On arbitrary decks the prefilter agrees with brute force: filtered-out
  // decks have no preimages.
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int card_n = 3;
    const auto& cards_pool = enumerate_graphs(card_n);
    std::vector<Graph> cards;
    for (int i = 0; i < card_n + 1; ++i)
      cards.push_back(cards_pool[rng() % cards_pool.size()]);
    Deck d(std::move(cards));
    const int n = card_n + 1;
    if (d.total_card_edges() % (n - 2) != 0) {
      CHECK(pcount(d) == 0);
      CHECK(brute_pcount(d) == 0);
    } else {
      CHECK(pcount(d) == brute_pcount(d));
    }
  }
}

TEST_CASE("restricted_legitimate") {
  // All cards K2 with k = 1: minimum degrees are 1, proceed to pcount 1.
  Deck triangle(std::vector<Graph>{complete(2), complete(2), complete(2)});
  auto res = restricted_legitimate(triangle, 1);
  CHECK(!res.reject_gap_zero);
  CHECK(res.preimages == 1);

  // A K3 card has min degree 2 > 1: gap-zero rejection.
  Deck with_k3(std::vector<Graph>{complete(3), complete(3), complete(3), complete(3)});
  CHECK(restricted_legitimate(with_k3, 1).reject_gap_zero);

  // Edgeless cards have min degree 0, fine for every k.
  Deck edgeless = deck(Graph(4));
  auto res0 = restricted_legitimate(edgeless, 0);
  CHECK(!res0.reject_gap_zero);
  CHECK(res0.preimages == 1);

  // With k >= n-2 every card on n-1 vertices passes, so the restricted
  // check agrees with plain legitimacy.
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      auto restricted = restricted_legitimate(deck(g), n - 2);
      CHECK(!restricted.reject_gap_zero);
      CHECK((restricted.preimages > 0) == is_legitimate(deck(g)));
    }
  }
}

TEST_CASE("q_reconstruction_report") {
  auto report = q_reconstruction_report(5, NatPoly::constant(1));
  REQUIRE(report.levels.size() == 4);  // n = 2..5
  CHECK(report.levels[0].n == 2);
  CHECK(report.levels[0].max_pcount == 2);  // the classic 2-vertex decks
  CHECK(report.levels[0].violations.empty());
  for (std::size_t i = 1; i < report.levels.size(); ++i) {
    CHECK(report.levels[i].max_pcount == 1);
    CHECK(report.levels[i].violations.empty());
  }
  CHECK(report.max_pcount == 2);
  CHECK(report.violation_count() == 0);

  // q(n) = n certainly holds as well.
  auto linear = q_reconstruction_report(3, NatPoly({0, 1}));
  CHECK(linear.violation_count() == 0);

  // Histogram totals match the class counts.
  for (const auto& level : report.levels) {
    std::uint64_t total = 0;
    for (const auto& [pc, classes] : level.histogram) total += classes;
    CHECK(total == level.classes);
  }

  CHECK_THROWS_AS(q_reconstruction_report(9, NatPoly::constant(1)), ResourceError);
}

TEST_CASE("graph6 round trip is bit exact") {
  // Known encodings: K3 is "Bw", the 3-vertex empty graph is "B?".
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(Graph(3)) == "B?");
  CHECK(from_graph6("Bw") == complete(3));
  CHECK(from_graph6("B?") == Graph(3));
  // P4 in canonical order from the standard tools.
  CHECK(to_graph6(Graph(4, {{1, 2}, {2, 3}, {3, 4}})) == "Ch");

  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    int n = static_cast<int>(rng() % 8) + 1;
    Graph g(n, static_cast<std::uint32_t>(rng()) & ((1u << (n * (n - 1) / 2)) - 1u));
    CHECK(from_graph6(to_graph6(g)) == g);
  }

  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);
  CHECK_THROWS_AS(from_graph6(std::string(1, static_cast<char>(200))), ParseError);
}

TEST_CASE("padded targets") {
  using gapcore::FpFunc;
  const Domain dom{"01", 8};

  // h == 1 gives unit products.
  auto ones = padded_targets(FpFunc::constant(1), 5, 2, dom);
  CHECK(ones.first == 1);
  CHECK(ones.second == 1);

  // h(0^i) = i+1, m = 3, n = 2: hhat = 24, hprime = 8, and 3 * 8 = 24.
  auto succ = FpFunc::add(FpFunc::input_len(), FpFunc::constant(1));
  auto [hhat, hprime] = padded_targets(succ, 3, 2, dom);
  CHECK(hhat == 24);
  CHECK(hprime == 8);
  CHECK(succ.eval(dom.zeroes(2), dom) * hprime == hhat);

  // n = m omits exactly the last factor.
  auto [hm, hp] = padded_targets(succ, 3, 3, dom);
  CHECK(hm == 24);
  CHECK(hp == 6);

  CHECK_THROWS_AS(padded_targets(succ, 2, 3, dom), DomainError);

  // Randomized padding identity with table-backed h.
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    std::map<std::string, BigInt> table;
    for (std::size_t i = 0; i <= dom.max_len; ++i) {
      int v = static_cast<int>(rng() % 9) - 4;
      table[dom.zeroes(i)] = v == 0 ? 1 : v;
    }
    PaddedTarget padded{FpFunc::table(std::move(table)), dom};
    std::size_t m = rng() % (dom.max_len + 1);
    std::size_t n = m == 0 ? 0 : rng() % (m + 1);
    CHECK(padded.h_at(n) * padded.hprime(m, n) == padded.hhat(m));
  }
}

TEST_CASE("multiplied_to_indexed") {
  using gapcore::FpFunc;
  const Domain dom{"01", 4};

  // f1(0^n) = 7, r = 3: targets {7, 14, 21} at every length.
  auto spec = multiplied_to_indexed(FpFunc::constant(7), NatPoly::constant(3), dom);
  CHECK(spec.targets_for("0101") == std::vector<BigInt>{7, 14, 21});
  CHECK_NOTHROW(spec.validate_nonzero());

  // f1 == 1 scales to {1..r(n)}.
  auto unit = multiplied_to_indexed(FpFunc::constant(1), NatPoly::constant(4), dom);
  CHECK(unit.targets_for("") == std::vector<BigInt>{1, 2, 3, 4});

  // Negative f1 stays nonzero.
  auto negative = multiplied_to_indexed(FpFunc::constant(-2), NatPoly::constant(2), dom);
  CHECK(negative.targets_for("01") == std::vector<BigInt>{-2, -4});

  // Vanishing f1 is rejected: |x| - 2 is zero at length 2.
  auto vanishing = FpFunc::sub(FpFunc::input_len(), FpFunc::constant(2));
  CHECK_THROWS_AS(multiplied_to_indexed(vanishing, NatPoly::constant(2), dom),
                  InvalidSpecError);
}

TEST_CASE("isomorphic graphs have identical decks") {
  std::mt19937 rng(77);
  for (int t = 0; t < 30; ++t) {
    int n = 3 + static_cast<int>(rng() % 4);
    Graph g(n, static_cast<std::uint32_t>(rng()) & ((1u << (n * (n - 1) / 2)) - 1u));
    // Relabel via a random permutation.
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (auto [u, v] : g.edges())
      h.add_edge(perm[static_cast<std::size_t>(u - 1)],
                 perm[static_cast<std::size_t>(v - 1)]);
    CHECK(is_isomorphic(g, h));
    const Deck dg = deck(g);
    CHECK(dg == deck(h));
    CHECK(dg.size() == static_cast<std::size_t>(n));
    for (const Graph& card : dg.cards())
      CHECK(card.vertex_count() == n - 1);
  }
}

TEST_CASE("deck promise compiles down to a single-target witness") {
  // End-to-end run of the application pipeline at desk scale: deck inputs,
  // gap = padded-h times preimage count, multiplied targets embedded as
  // indexed targets, then the collapse compiler. All decks here are encoded
  // as distinct strings of one fixed length, with the deck size n recovered
  // from the content, which is exactly what the padding construction is for.
  using gapcore::FpFunc;
  using gapcore::GapProgram;
  using gapcore::TargetMode;

  const std::size_t m = 4;  // encoded input length
  const Domain dom{"01", m};

  // Random positive h on lengths 0..m and its padded products.
  std::mt19937 rng(4097);
  std::map<std::string, BigInt> h_table;
  for (std::size_t i = 0; i <= m; ++i)
    h_table[dom.zeroes(i)] = 1 + static_cast<int>(rng() % 4);
  PaddedTarget padded{FpFunc::table(h_table), dom};

  // Deck family: every deck of a graph on 2 or 3 vertices, plus an
  // illegitimate deck; each deck gets a distinct length-4 input string.
  std::vector<Deck> decks;
  for (int n = 2; n <= 3; ++n) {
    std::set<Deck> seen;
    for (const Graph& g : enumerate_graphs(n))
      if (seen.insert(deck(g)).second) decks.push_back(deck(g));
  }
  decks.push_back(Deck(std::vector<Graph>{Graph(2, {{1, 2}}), Graph(2, {{1, 2}})}));
  REQUIRE(decks.size() <= (1u << m));

  const auto inputs = dom.enumerate_length(m);
  std::map<std::string, BigInt> gap_table;
  std::set<std::string> legitimate_inputs;
  for (const std::string& x : dom.enumerate()) gap_table[x] = 0;
  for (std::size_t d = 0; d < decks.size(); ++d) {
    const std::string& x = inputs[d];
    const std::size_t n = decks[d].size();
    const BigInt count = pcount(decks[d]);
    // g(x) = h(0^n) * PCount * h', which the padding identity turns into
    // PCount * hhat(0^m).
    gap_table[x] =
        padded.h_at(n) * count * padded.hprime(m, n);
    CHECK(gap_table[x] == count * padded.hhat(m));
    if (count > 0) legitimate_inputs.insert(x);
  }

  // Indexed targets f2(<0^l, i>) = i * hhat(0^l) with multiplicity covering
  // the maximum preimage count (2 at this scale).
  std::map<std::string, BigInt> hhat_table;
  for (std::size_t i = 0; i <= m; ++i) hhat_table[dom.zeroes(i)] = padded.hhat(i);
  auto spec = multiplied_to_indexed(FpFunc::table(hhat_table), NatPoly::constant(2), dom);

  auto g = GapProgram::const_fp(FpFunc::table(gap_table), dom);
  auto language = [&](const std::string& x) { return legitimate_inputs.count(x) > 0; };

  auto original = gapcore::verify_class_membership(g, spec, language,
                                                   gapcore::CountingClass::kRLWPP);
  CHECK(original.ok());

  auto witness = gapcore::collapse_lwpp(g, spec);
  auto single =
      gapcore::single_target_spec(witness.fhat, TargetMode::kLengthIndexed, dom);
  auto compiled = gapcore::verify_class_membership(witness.ghat, single, language,
                                                   gapcore::CountingClass::kLWPP);
  CHECK(compiled.ok());
  for (const std::string& x : dom.enumerate())
    CHECK((witness.ghat.eval(x) == 0) == !legitimate_inputs.count(x));
}

TEST_CASE("restricted deck promise folds the class check into the gap") {
  // Same pipeline with the bounded-min-degree restriction: a deck with a
  // card outside H_k produces gap zero without any counting.
  using gapcore::FpFunc;
  using gapcore::GapProgram;
  const std::size_t m = 4;
  const Domain dom{"01", m};
  const int k = 1;

  std::vector<Deck> decks;
  for (int n = 3; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n)) decks.push_back(deck(g));
  const auto inputs = dom.enumerate_length(m);
  REQUIRE(decks.size() <= inputs.size());

  std::map<std::string, BigInt> gap_table;
  std::set<std::string> accepted;
  for (const std::string& x : dom.enumerate()) gap_table[x] = 0;
  for (std::size_t d = 0; d < decks.size(); ++d) {
    auto res = restricted_legitimate(decks[d], k);
    if (res.reject_gap_zero) continue;  // gap stays zero
    gap_table[inputs[d]] = res.preimages;
    if (res.preimages > 0) accepted.insert(inputs[d]);
  }

  auto spec = multiplied_to_indexed(FpFunc::constant(1), NatPoly::constant(2), dom);
  auto g = GapProgram::const_fp(FpFunc::table(gap_table), dom);
  auto report = gapcore::verify_class_membership(
      g, spec, [&](const std::string& x) { return accepted.count(x) > 0; },
      gapcore::CountingClass::kRLWPP);
  CHECK(report.ok());
}

TEST_CASE("canonical form agrees with full permutation enumeration") {
  // Independent oracle: minimize the encoding over every permutation with
  // std::next_permutation, no pruning.
  auto oracle_canonical = [](const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::string best;
    do {
      std::string enc;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          enc.push_back(g.has_edge(perm[static_cast<std::size_t>(i)] + 1,
                                   perm[static_cast<std::size_t>(j)] + 1)
                            ? '1'
                            : '0');
      if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::uint32_t bits = 0;
    for (std::size_t p = 0; p < best.size(); ++p)
      if (best[p] == '1') bits |= 1u << p;
    return Graph(n, bits);
  };

  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g(n, static_cast<std::uint32_t>(rng()) & ((1u << (n * (n - 1) / 2)) - 1u));
    CHECK(canonical_form(g) == oracle_canonical(g));
  }
  // And exhaustively on all labeled graphs up to 4 vertices.
  for (int n = 0; n <= 4; ++n) {
    const int total = n * (n - 1) / 2;
    for (std::uint32_t bits = 0; bits < (1u << total); ++bits) {
      Graph g(n, bits);
      CHECK(canonical_form(g) == oracle_canonical(g));
    }
  }
}

TEST_CASE("the full default bound n=8 stays usable") {
  CHECK(enumerate_graphs(8).size() == 12346);
  const Graph& g = enumerate_graphs(8)[5000];
  CHECK(pcount(deck(g)) == 1);
}
