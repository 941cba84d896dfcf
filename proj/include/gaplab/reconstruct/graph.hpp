#ifndef GAPLAB_RECONSTRUCT_GRAPH_HPP_
#define GAPLAB_RECONSTRUCT_GRAPH_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gaplab::reconstruct {

// Hard ceiling on vertex counts; canonicalization is brute force over vertex
// permutations and the preimage index enumerates all classes per level.
inline constexpr int kMaxVertices = 8;

// Simple undirected graph on vertices {1..n}, n <= 8. Edges live in a
// column-major upper-triangle bitmask (the graph6 bit order), so graphs on
// equal vertex counts compare as integers.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::uint32_t bits = 0);
  // From a 1-indexed edge list.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int edge_count() const;

  // 1-indexed adjacency test/update.
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;
  // Degree of vertex v (1-indexed); min_degree of the empty graph is 0.
  int degree(int v) const;
  int min_degree() const;
  std::vector<int> degree_sequence() const;  // sorted ascending

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator<(const Graph& o) const {
    return n_ != o.n_ ? n_ < o.n_ : bits_ < o.bits_;
  }

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

// Graph with vertex k (1-indexed) deleted and the rest relabeled contiguously.
Graph delete_vertex(const Graph& g, int k);

// Lexicographically minimal upper-triangle encoding over all vertex
// permutations (branch-and-bound with prefix pruning). Two graphs are
// isomorphic exactly when their canonical forms are equal.
Graph canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

// One canonical representative per isomorphism class on n vertices, sorted
// by encoding. Memoized process-wide. Throws ResourceError for n > bound.
const std::vector<Graph>& enumerate_graphs(int n, int bound = kMaxVertices);

// Headerless graph6 encoding (n <= 62 in general; bounded here by the
// library ceiling), bit-exact with the de-facto standard.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace gaplab::reconstruct

#endif  // GAPLAB_RECONSTRUCT_GRAPH_HPP_
