#include "hamspan/cycle_space.hpp"

#include <queue>
#include <stdexcept>

namespace hamspan {

int cycle_space_dim(const Graph& g) {
  return g.edge_count() - g.vertex_count() + connected_component_count(g);
}

CycleBasis fundamental_cycle_basis(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  CycleBasis basis;

  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<char> tree_edge(m, 0);
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++components;
    seen[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = u;
        tree_edge[g.edge_index(u, w)] = 1;
        queue.push(w);
      }
    }
  }
  basis.dimension = m - n + components;

  // Path to root as an edge set; shared tree segments cancel under XOR, so
  // path(u) ^ path(v) ^ {u,v} is the circuit closed by the non-tree edge.
  auto path_to_root = [&](int v, EdgeVector& acc) {
    while (parent[v] != -1) {
      acc.flip(g.edge_index(v, parent[v]));
      v = parent[v];
    }
  };
  basis.fundamental.reserve(basis.dimension);
  for (int e = 0; e < m; ++e) {
    if (tree_edge[e]) continue;
    auto [u, v] = g.edge_at(e);
    EdgeVector cycle(m);
    path_to_root(u, cycle);
    path_to_root(v, cycle);
    cycle.flip(e);
    basis.fundamental.push_back(std::move(cycle));
  }
  return basis;
}

namespace {

bool has_even_degrees(const Graph& g, const EdgeVector& v) {
  std::vector<int> degree(g.vertex_count(), 0);
  for (int e : v.support()) {
    auto [a, b] = g.edge_at(e);
    degree[a]++;
    degree[b]++;
  }
  for (int d : degree)
    if (d & 1) return false;
  return true;
}

}  // namespace

bool is_cycle(const Graph& g, const EdgeVector& v) {
  if (v.dimension() != g.edge_count())
    throw std::invalid_argument("is_cycle: vector dimension != edge count");
  bool even = has_even_degrees(g, v);
  CycleBasis cb = fundamental_cycle_basis(g);
  Gf2Basis basis(g.edge_count());
  for (const auto& f : cb.fundamental) basis.insert(f);
  bool spanned = basis.contains(v);
  if (even != spanned)
    throw std::logic_error("is_cycle: even-degree and span criteria disagree");
  return even;
}

int quotient_dim(const Graph& g, const std::vector<EdgeVector>& generators) {
  CycleBasis cb = fundamental_cycle_basis(g);
  Gf2Basis z1(g.edge_count());
  for (const auto& f : cb.fundamental) z1.insert(f);
  Gf2Basis span(g.edge_count());
  for (const auto& gen : generators) {
    if (gen.dimension() != g.edge_count())
      throw std::invalid_argument("quotient_dim: generator dimension != edge count");
    bool even = has_even_degrees(g, gen);
    bool in_z1 = z1.contains(gen);
    if (even != in_z1)
      throw std::logic_error("quotient_dim: cycle criteria disagree");
    if (!in_z1)
      throw std::invalid_argument("quotient_dim: generator outside the cycle space");
    span.insert(gen);
  }
  return cb.dimension - span.rank();
}

}  // namespace hamspan
