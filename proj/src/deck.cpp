#include "gaplab/reconstruct/deck.hpp"

#include <algorithm>
#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::reconstruct {

Deck::Deck(std::vector<Graph> cards) : cards_(std::move(cards)) {
  for (Graph& card : cards_) card = canonical_form(card);
  std::sort(cards_.begin(), cards_.end());
  for (const Graph& card : cards_) {
    if (card.vertex_count() != cards_[0].vertex_count())
      throw InvalidDeckError("cards have mixed vertex counts");
  }
}

int Deck::total_card_edges() const {
  int total = 0;
  for (const Graph& card : cards_) total += card.edge_count();
  return total;
}

Deck deck(const Graph& g) {
  std::vector<Graph> cards;
  cards.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int k = 1; k <= g.vertex_count(); ++k)
    cards.push_back(delete_vertex(g, k));
  return Deck(std::move(cards));
}

namespace {

using DeckKey = std::vector<std::uint32_t>;

DeckKey key_of(const Deck& d) {
  DeckKey key;
  key.reserve(d.size());
  for (const Graph& card : d.cards()) key.push_back(card.bits());
  return key;
}

// Deck fingerprint -> preimage count over the canonical graphs on n
// vertices. Built once per level and reused across queries.
const std::map<DeckKey, std::uint64_t>& deck_index(int n, int bound) {
  static std::map<int, std::map<DeckKey, std::uint64_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<DeckKey, std::uint64_t> index;
  for (const Graph& g : enumerate_graphs(n, bound)) ++index[key_of(deck(g))];
  return cache.emplace(n, std::move(index)).first->second;
}

}  // namespace

std::uint64_t pcount(const Deck& d, int bound) {
  const int n = d.empty() ? 0 : d.card_vertices() + 1;
  if (n > bound || n > kMaxVertices)
    throw ResourceError("preimages would have " + std::to_string(n) +
                        " vertices, above the bound");
  // A deck of m cards needs a preimage on m vertices; n was derived from the
  // card size, so a size mismatch leaves nothing to count.
  if (!d.empty() && static_cast<int>(d.size()) != n) return 0;
  // Kelly's edge count law: every preimage edge appears in exactly n-2 cards.
  if (n >= 3 && d.total_card_edges() % (n - 2) != 0) return 0;
  const auto& index = deck_index(n, bound);
  auto it = index.find(key_of(d));
  return it == index.end() ? 0 : it->second;
}

bool is_legitimate(const Deck& d, int bound) { return pcount(d, bound) > 0; }

RestrictedResult restricted_legitimate(const Deck& d, int k, int bound) {
  for (const Graph& card : d.cards()) {
    if (card.min_degree() > k) return {true, 0};
  }
  return {false, pcount(d, bound)};
}

QReconReport q_reconstruction_report(int n_max, const NatPoly& q, int bound) {
  if (n_max > bound || n_max > kMaxVertices)
    throw ResourceError("n_max " + std::to_string(n_max) + " exceeds the bound");
  QReconReport report;
  for (int n = 2; n <= n_max; ++n) {
    QReconLevel level;
    level.n = n;
    const auto& classes = enumerate_graphs(n, bound);
    level.classes = classes.size();
    for (const Graph& g : classes) {
      const Deck d = deck(g);
      const std::uint64_t count = pcount(d, bound);
      level.max_pcount = std::max(level.max_pcount, count);
      ++level.histogram[count];
      if (n >= 3 && count > q.eval(static_cast<std::uint64_t>(n)))
        level.violations.push_back({d, count, q.eval(static_cast<std::uint64_t>(n))});
    }
    report.max_pcount = std::max(report.max_pcount, level.max_pcount);
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace gaplab::reconstruct
