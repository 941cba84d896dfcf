#ifndef GAPLAB_RECONSTRUCT_DECK_HPP_
#define GAPLAB_RECONSTRUCT_DECK_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "gaplab/natpoly.hpp"
#include "gaplab/reconstruct/graph.hpp"

namespace gaplab::reconstruct {

// Multiset of canonical one-vertex-deleted cards, stored as a sorted
// sequence of canonical encodings, so deck equality is plain comparison.
class Deck {
 public:
  Deck() = default;
  // Cards are canonicalized and sorted; throws InvalidDeckError on mixed
  // vertex counts.
  explicit Deck(std::vector<Graph> cards);

  const std::vector<Graph>& cards() const { return cards_; }
  std::size_t size() const { return cards_.size(); }
  bool empty() const { return cards_.empty(); }
  // Vertex count of each card (0 for the empty deck).
  int card_vertices() const { return cards_.empty() ? 0 : cards_[0].vertex_count(); }
  int total_card_edges() const;

  bool operator==(const Deck& o) const { return cards_ == o.cards_; }
  bool operator<(const Deck& o) const { return cards_ < o.cards_; }

 private:
  std::vector<Graph> cards_;
};

// The deck of G: all n one-vertex-deleted subgraphs in canonical form.
Deck deck(const Graph& g);

// Number of nonisomorphic preimages: canonical graphs G on n = card size + 1
// vertices with deck(G) equal to d. Applies the edge-count feasibility
// prefilter (each edge of a preimage shows up in exactly n-2 cards, so the
// card edge total must be divisible by n-2) before consulting the memoized
// deck index. Throws ResourceError when the preimage level exceeds `bound`.
std::uint64_t pcount(const Deck& d, int bound = kMaxVertices);

bool is_legitimate(const Deck& d, int bound = kMaxVertices);

// Membership-restricted legitimacy: if some card has minimum degree above k
// (so it lies outside the bounded-min-degree class), the promise machine
// would produce a gap of zero without counting anything.
struct RestrictedResult {
  bool reject_gap_zero = false;
  std::uint64_t preimages = 0;  // meaningful only when !reject_gap_zero
};
RestrictedResult restricted_legitimate(const Deck& d, int k, int bound = kMaxVertices);

// Empirical sweep of the q-Reconstruction Conjecture: preimage counts of
// deck(G) for every class with 2 <= |V| <= n_max. Violations (pcount above
// q(n)) are only meaningful for n >= 3, the conjecture's hypothesis; the
// n = 2 level is reported for its classic pcount-2 decks but never counted
// as a violation.
struct QReconViolation {
  Deck deck;
  std::uint64_t preimages = 0;
  std::uint64_t bound = 0;  // q(n)
};

struct QReconLevel {
  int n = 0;
  std::uint64_t classes = 0;
  std::uint64_t max_pcount = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // pcount -> #classes
  std::vector<QReconViolation> violations;
};

struct QReconReport {
  std::vector<QReconLevel> levels;
  std::uint64_t max_pcount = 0;
  std::uint64_t violation_count() const {
    std::uint64_t total = 0;
    for (const auto& level : levels) total += level.violations.size();
    return total;
  }
};

QReconReport q_reconstruction_report(int n_max, const NatPoly& q,
                                     int bound = kMaxVertices);

}  // namespace gaplab::reconstruct

#endif  // GAPLAB_RECONSTRUCT_DECK_HPP_
