#include "hamspan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hamspan/rng.hpp"

namespace hamspan {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge rejected");
  return Graph(n, std::move(edges));
}

Graph::Graph(int n, std::vector<std::pair<int, int>> sorted_edges)
    : n_(n), edges_(std::move(sorted_edges)) {
  build_index();
}

void Graph::build_index() {
  adj_.assign(n_, {});
  std::vector<int> deg(n_, 0);
  for (auto [u, v] : edges_) {
    deg[u]++;
    deg[v]++;
  }
  for (int v = 0; v < n_; ++v) adj_[v].reserve(deg[v]);
  // edges_ is lexicographically sorted, so each list fills in ascending
  // order: partners below v all arrive before partners above v.
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  edge_base_.assign(n_ + 1, 0);
  for (auto [u, v] : edges_) edge_base_[u + 1]++;
  for (int u = 0; u < n_; ++u) edge_base_[u + 1] += edge_base_[u];

  if (n_ <= 64) {
    masks_.assign(n_, 0);
    for (auto [u, v] : edges_) {
      masks_[u] |= 1ull << v;
      masks_[v] |= 1ull << u;
    }
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (!masks_.empty()) return (masks_[u] >> v) & 1;
  const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nbrs.begin(), nbrs.end(), other);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (!has_edge(u, v)) throw std::invalid_argument("edge_index: no such edge");
  const auto& nbrs = adj_[u];
  auto first_above = std::lower_bound(nbrs.begin(), nbrs.end(), u + 1);
  auto pos = std::lower_bound(first_above, nbrs.end(), v);
  return edge_base_[u] + static_cast<int>(pos - first_above);
}

Graph gen_k_hat(int s) {
  if (s < 3) throw std::invalid_argument("gen_k_hat requires s >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(s * (s - 1) + 2);
  edges.emplace_back(0, 1);
  edges.emplace_back(0, 2 * s - 1);
  for (int odd = 1; odd <= 2 * s - 1; odd += 2)
    for (int even = 2; even <= 2 * s - 2; even += 2)
      edges.emplace_back(std::min(odd, even), std::max(odd, even));
  return Graph::from_edges(2 * s, std::move(edges));
}

Graph gen_square_cycle(int n) {
  if (n < 5) throw std::invalid_argument("gen_square_cycle requires n >= 5");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= 2; ++d) {
      int j = (i + d) % n;
      edges.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

// Pair stream layout: pair t in lexicographic order maps to variate
// rng::at(seed, t). The inner row scan counts hits branch-free in blocks
// and only then extracts edges, which keeps the (rare-hit) sparse regime
// fast without changing which pairs are drawn.
Graph gnp_sample(int n, double p, uint64_t seed) {
  std::vector<std::pair<int, int>> edges;
  if (p >= 1.0) {
    edges.reserve(size_t(n) * (n - 1) / 2);
    for (int u = 0; u + 1 < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
  }
  const uint64_t threshold = rng::probability_threshold(p);
  if (threshold != 0) {
    const double expect = double(n) * (n - 1) / 2 * p;
    edges.reserve(size_t(expect + 4 * std::sqrt(expect + 1) + 16));
    constexpr int kBlock = 2048;
    uint8_t hit[kBlock];
    uint64_t t = 0;
    for (int u = 0; u + 1 < n; ++u) {
      const int len = n - 1 - u;
      int done = 0;
      while (done < len) {
        const int blk = std::min(kBlock, len - done);
        const uint64_t base = t + done;
        int count = 0;
        for (int i = 0; i < blk; ++i) {
          uint8_t h = rng::at(seed, base + i) < threshold;
          hit[i] = h;
          count += h;
        }
        if (count) {
          for (int i = 0; i < blk; ++i)
            if (hit[i]) edges.emplace_back(u, u + 1 + done + i);
        }
        done += blk;
      }
      t += len;
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_gnp(int n, double p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_gnp: negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p outside [0,1]");
  return gnp_sample(n, p, seed);
}

Graph delete_vertex(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("delete_vertex: vertex out of range");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return Graph::from_edges(n - 1, std::move(edges));
}

namespace {

struct Coloring {
  bool bipartite = true;
  std::vector<uint8_t> color;
  std::vector<int> parent;
  std::vector<int> odd_cycle;
  int components = 0;
};

// BFS 2-coloring; on a same-color edge, stitches the two tree paths into an
// odd circuit witness.
Coloring two_color(const Graph& g) {
  const int n = g.vertex_count();
  Coloring out;
  out.color.assign(n, 2);
  out.parent.assign(n, -1);
  for (int root = 0; root < n; ++root) {
    if (out.color[root] != 2) continue;
    out.components++;
    out.color[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : g.neighbors(u)) {
        if (out.color[w] == 2) {
          out.color[w] = out.color[u] ^ 1;
          out.parent[w] = u;
          queue.push(w);
        } else if (out.color[w] == out.color[u] && out.bipartite) {
          out.bipartite = false;
          // Walk both endpoints up to their common ancestor.
          std::vector<int> pu{u}, pw{w};
          auto depth = [&](int x) {
            int d = 0;
            for (int y = x; out.parent[y] != -1; y = out.parent[y]) ++d;
            return d;
          };
          int du = depth(u), dw = depth(w);
          int a = u, b = w;
          while (du > dw) { a = out.parent[a]; pu.push_back(a); --du; }
          while (dw > du) { b = out.parent[b]; pw.push_back(b); --dw; }
          while (a != b) {
            a = out.parent[a]; pu.push_back(a);
            b = out.parent[b]; pw.push_back(b);
          }
          // pu ends at the common ancestor; pw's copy of it is dropped.
          out.odd_cycle.assign(pu.begin(), pu.end());
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
            out.odd_cycle.push_back(*it);
        }
      }
    }
  }
  return out;
}

bool triangle_exists(const Graph& g) {
  if (g.has_masks()) {
    for (auto [u, v] : g.edges())
      if (g.neighbor_mask(u) & g.neighbor_mask(v)) return true;
    return false;
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = g.degree(u) <= g.degree(v) ? g.neighbors(u) : g.neighbors(v);
    const auto& b = g.degree(u) <= g.degree(v) ? g.neighbors(v) : g.neighbors(u);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia == *ib) return true;
      if (*ia < *ib) ++ia; else ++ib;
    }
  }
  return false;
}

}  // namespace

StructuralReport structural_predicates(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("structural_predicates: empty graph");
  StructuralReport r;
  r.min_degree = n;
  bool all_degree2 = true;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    r.min_degree = std::min(r.min_degree, d);
    if (d == 2) r.degree2_vertices.push_back(v);
    if (d != 2) all_degree2 = false;
  }
  Coloring col = two_color(g);
  r.is_connected = col.components == 1;
  r.is_forest = g.edge_count() == n - col.components;
  r.is_circuit = r.is_connected && all_degree2 && n >= 3;
  r.is_bipartite = col.bipartite;
  if (col.bipartite)
    r.two_coloring = std::move(col.color);
  else
    r.odd_cycle = std::move(col.odd_cycle);
  r.has_triangle = triangle_exists(g);
  return r;
}

int connected_component_count(const Graph& g) {
  return two_color(g).components;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && two_color(g).components == 1;
}

bool is_bipartite(const Graph& g) { return two_color(g).bipartite; }

bool has_triangle(const Graph& g) { return triangle_exists(g); }

int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("min_degree: empty graph");
  int md = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) md = std::min(md, g.degree(v));
  return md;
}

void write_graph_text(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_text(std::istream& in) {
  auto fail = [](const std::string& why) -> Graph {
    throw std::runtime_error("graph text: " + why);
  };
  std::string line;
  if (!std::getline(in, line)) return fail("missing header line");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || (header >> std::ws, !header.eof()))
    return fail("header must be \"n m\"");
  if (n < 0 || m < 0) return fail("negative counts");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) return fail("fewer edge lines than announced");
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || (row >> std::ws, !row.eof()))
      return fail("edge line must be \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) return fail("endpoint out of range");
    if (u >= v) return fail("edges must satisfy u < v");
    std::pair<int, int> e(static_cast<int>(u), static_cast<int>(v));
    if (!edges.empty() && !(edges.back() < e))
      return fail("edges must be in strictly increasing lexicographic order");
    edges.push_back(e);
  }
  if (std::getline(in, line) && !line.empty())
    return fail("trailing content after edge list");
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

}  // namespace hamspan
