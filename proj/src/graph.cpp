#include "gaplab/reconstruct/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

#include "gaplab/errors.hpp"

namespace gaplab::reconstruct {

namespace {

// Column-major upper-triangle bit position of pair (i, j), 0-indexed, i < j.
inline int bit_pos(int i, int j) { return j * (j - 1) / 2 + i; }

inline int total_bits(int n) { return n * (n - 1) / 2; }

void check_vertex(const Graph& g, int v) {
  if (v < 1 || v > g.vertex_count())
    throw DomainError("vertex " + std::to_string(v) + " out of range 1.." +
                      std::to_string(g.vertex_count()));
}

}  // namespace

Graph::Graph(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxVertices)
    throw ResourceError("vertex count " + std::to_string(n) + " outside 0.." +
                        std::to_string(kMaxVertices));
  if (n >= 2 && (bits >> total_bits(n)) != 0)
    throw DomainError("edge bits beyond the vertex-pair range");
  if (n < 2 && bits != 0) throw DomainError("edge bits on a graph without vertex pairs");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::edge_count() const { return std::popcount(bits_); }

bool Graph::has_edge(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) return false;
  int i = std::min(u, v) - 1, j = std::max(u, v) - 1;
  return (bits_ >> bit_pos(i, j)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw DomainError("loops are not allowed");
  int i = std::min(u, v) - 1, j = std::max(u, v) - 1;
  bits_ |= 1u << bit_pos(i, j);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if ((bits_ >> bit_pos(i, j)) & 1u) out.emplace_back(i + 1, j + 1);
  return out;
}

int Graph::degree(int v) const {
  check_vertex(*this, v);
  int d = 0;
  for (int u = 1; u <= n_; ++u)
    if (u != v && has_edge(u, v)) ++d;
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 1; v <= n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n_));
  for (int v = 1; v <= n_; ++v) seq.push_back(degree(v));
  std::sort(seq.begin(), seq.end());
  return seq;
}

Graph delete_vertex(const Graph& g, int k) {
  check_vertex(g, k);
  const int n = g.vertex_count();
  Graph out(n - 1);
  auto relabel = [k](int v) { return v < k ? v : v - 1; };
  for (auto [u, v] : g.edges()) {
    if (u == k || v == k) continue;
    out.add_edge(relabel(u), relabel(v));
  }
  return out;
}

namespace {

// Neighbor bitmasks (0-indexed) for fast column construction.
std::array<std::uint8_t, 8> adjacency_masks(const Graph& g) {
  std::array<std::uint8_t, 8> adj{};
  const int n = g.vertex_count();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((g.bits() >> bit_pos(i, j)) & 1u) {
        adj[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
        adj[static_cast<std::size_t>(j)] |= static_cast<std::uint8_t>(1u << i);
      }
  return adj;
}

struct CanonSearch {
  int n;  // at most kMaxVertices, matching the fixed array sizes below
  int total;
  std::array<std::uint8_t, 8> adj;
  std::uint32_t best;

  // Bits packed most-significant-first so prefixes compare as integers.
  std::uint32_t prefix_mask(int filled) const {
    if (filled == 0) return 0;
    if (filled >= total) return total == 32 ? ~0u : (1u << total) - 1u;
    return (((1u << filled) - 1u) << (total - filled));
  }

  void run(std::uint32_t cur, int depth, std::array<int, 8>& perm,
           std::uint8_t used) {
    if (depth > kMaxVertices) return;
    const int filled = total_bits(depth);
    const std::uint32_t mask = prefix_mask(filled);
    if ((cur & mask) > (best & mask)) return;  // prefix already beaten
    if (depth == n) {
      if (cur < best) best = cur;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      // Column `depth`: adjacency of v to the already-placed vertices.
      std::uint32_t next = cur;
      for (int i = 0; i < depth; ++i) {
        if (adj[static_cast<std::size_t>(v)] & (1u << perm[static_cast<std::size_t>(i)])) {
          const int pos = bit_pos(i, depth);
          next |= 1u << (total - 1 - pos);
        }
      }
      perm[static_cast<std::size_t>(depth)] = v;
      run(next, depth + 1, perm, static_cast<std::uint8_t>(used | (1u << v)));
    }
  }
};

// Identity encoding of g in the packed most-significant-first layout.
std::uint32_t packed_identity(const Graph& g) {
  const int total = total_bits(g.vertex_count());
  std::uint32_t out = 0;
  for (int p = 0; p < total; ++p)
    if ((g.bits() >> p) & 1u) out |= 1u << (total - 1 - p);
  return out;
}

std::uint32_t unpack(std::uint32_t packed, int n) {
  const int total = total_bits(n);
  std::uint32_t out = 0;
  for (int p = 0; p < total; ++p)
    if ((packed >> (total - 1 - p)) & 1u) out |= 1u << p;
  return out;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return g;
  CanonSearch search{n, total_bits(n), adjacency_masks(g), packed_identity(g)};
  std::array<int, 8> perm{};
  search.run(0, 0, perm, 0);
  return Graph(n, unpack(search.best, n));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

const std::vector<Graph>& enumerate_graphs(int n, int bound) {
  if (n < 0) throw DomainError("negative vertex count");
  if (n > bound || n > kMaxVertices)
    throw ResourceError("enumerate_graphs(" + std::to_string(n) +
                        ") exceeds the bound " + std::to_string(std::min(bound, kMaxVertices)));
  static std::vector<std::vector<Graph>> levels{{Graph(0)}};
  // Augment: every class on n vertices arises from some class on n-1
  // vertices by attaching the new vertex with some neighborhood.
  while (static_cast<int>(levels.size()) <= n) {
    const int k = static_cast<int>(levels.size());
    std::set<Graph> next;
    for (const Graph& parent : levels[static_cast<std::size_t>(k - 1)]) {
      for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        Graph candidate(k, 0u);
        for (auto [u, v] : parent.edges()) candidate.add_edge(u, v);
        for (int i = 0; i < k - 1; ++i)
          if ((nb >> i) & 1u) candidate.add_edge(i + 1, k);
        next.insert(canonical_form(candidate));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels[static_cast<std::size_t>(n)];
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  const int total = total_bits(n);
  for (int start = 0; start < total; start += 6) {
    int group = 0;
    for (int k = 0; k < 6; ++k) {
      const int p = start + k;
      const int bit = p < total ? static_cast<int>((g.bits() >> p) & 1u) : 0;
      group = (group << 1) | bit;
    }
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw ParseError("empty graph6 string");
  const int n = s[0] - 63;
  if (n < 0 || n > kMaxVertices)
    throw ParseError("graph6 vertex count " + std::to_string(n) +
                     " outside supported range 0.." + std::to_string(kMaxVertices));
  const int total = total_bits(n);
  const int groups = (total + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + groups)
    throw ParseError("graph6 string \"" + s + "\" has wrong length");
  std::uint32_t bits = 0;
  for (int gi = 0; gi < groups; ++gi) {
    const int value = s[static_cast<std::size_t>(gi) + 1] - 63;
    if (value < 0 || value > 63)
      throw ParseError("graph6 character out of range in \"" + s + "\"");
    for (int k = 0; k < 6; ++k) {
      const int p = gi * 6 + k;
      const int bit = (value >> (5 - k)) & 1;
      if (p < total) {
        if (bit) bits |= 1u << p;
      } else if (bit) {
        throw ParseError("graph6 padding bits must be zero in \"" + s + "\"");
      }
    }
  }
  return Graph(n, bits);
}

}  // namespace gaplab::reconstruct
