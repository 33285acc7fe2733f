#ifndef HAMSPAN_GRAPH_HPP
#define HAMSPAN_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace hamspan {

// Simple undirected graph on vertices 0..n-1 with a canonical edge indexing:
// edges are the pairs {u,v}, u < v, numbered 0..m-1 in lexicographic (u,v)
// order. That order is load-bearing: it fixes the row order of every
// edge-space vector and of the golden matrices.
//
// Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Validates: vertex range, no self-loops, no duplicate edges.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  // Lexicographically sorted list of (u,v) pairs, u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge_at(int index) const { return edges_[index]; }
  // Index of {u,v} in the canonical order; throws if the edge is absent.
  int edge_index(int u, int v) const;

  // Neighbor bitmasks are maintained for graphs small enough for the
  // exhaustive searches (n <= 64); large random graphs skip them.
  bool has_masks() const { return !masks_.empty(); }
  uint64_t neighbor_mask(int v) const { return masks_[v]; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  friend Graph gnp_sample(int n, double p, uint64_t seed);
  // Trusted constructor: edges must already be sorted, deduplicated and
  // in range.
  Graph(int n, std::vector<std::pair<int, int>> sorted_edges);

  void build_index();

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;   // sorted neighbor lists
  std::vector<int> edge_base_;          // #edges (a,b) with a < u
  std::vector<uint64_t> masks_;         // only when n_ <= 64
};

// The K^{s-hat, s-1} family: complete bipartite graph on the odd class
// {1,3,...,2s-1} and the even class {2,4,...,2s-2}, plus vertex 0 joined to
// 1 and 2s-1. 2s vertices, s(s-1)+2 edges, one degree-2 vertex. s >= 3.
Graph gen_k_hat(int s);

// Square of the n-circuit: circuit 0..n-1 plus chords at circular distance
// two. 4-regular with 2n edges. n >= 5.
Graph gen_square_cycle(int n);

// Binomial random graph G(n,p). Each of the C(n,2) pairs is included
// independently with probability p, visiting pairs in lexicographic order
// and drawing exactly one variate per pair from the stream keyed by `seed`.
// Identical (n, p, seed) always yields the identical graph, and for fixed
// seed the edge set is monotone in p (shared-variate coupling).
Graph gen_gnp(int n, double p, uint64_t seed);

// New graph with v removed and the remaining vertices relabeled compactly
// (order-preserving). Edge indices are rebuilt from scratch.
Graph delete_vertex(const Graph& g, int v);

struct StructuralReport {
  int min_degree = 0;
  bool is_forest = false;
  bool is_circuit = false;
  bool is_connected = false;
  bool is_bipartite = false;
  bool has_triangle = false;
  std::vector<int> degree2_vertices;
  // 2-coloring witness (per-vertex color 0/1) when bipartite, otherwise an
  // odd circuit as a vertex list.
  std::vector<uint8_t> two_coloring;
  std::vector<int> odd_cycle;
};

// Rejects the empty graph.
StructuralReport structural_predicates(const Graph& g);

int connected_component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_triangle(const Graph& g);
int min_degree(const Graph& g);

// Text format: first line "n m", then m lines "u v" with u < v, ASCII
// decimal, in lexicographic order. Strict on read; anything else is a
// std::runtime_error.
void write_graph_text(const Graph& g, std::ostream& out);
Graph read_graph_text(std::istream& in);

}  // namespace hamspan

#endif
