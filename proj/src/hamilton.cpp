#include "hamspan/hamilton.hpp"

#include <algorithm>
#include <bit>

#include "hamspan/cycle_space.hpp"

namespace hamspan {

namespace {

inline int lowest(uint64_t bits) { return std::countr_zero(bits); }

// Shared state for the exhaustive searches. All of them operate on
// single-word vertex masks and an n x n edge index table.
struct SearchBase {
  const Graph& g;
  int n;
  uint64_t all;
  std::vector<uint64_t> mask;
  std::vector<int> edge_id;  // n*n lookup, -1 where no edge

  explicit SearchBase(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    if (n > kMaxSearchVertices)
      throw enumeration_limit("graph too large for exhaustive search");
    all = n == 64 ? ~0ull : (1ull << n) - 1;
    mask.resize(n);
    for (int v = 0; v < n; ++v) mask[v] = g.neighbor_mask(v);
    edge_id.assign(static_cast<size_t>(n) * n, -1);
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge_at(e);
      edge_id[static_cast<size_t>(u) * n + v] = e;
      edge_id[static_cast<size_t>(v) * n + u] = e;
    }
  }

  int edge(int u, int v) const { return edge_id[static_cast<size_t>(u) * n + v]; }

  // Vertices reachable from `from` by paths whose interior and endpoints
  // stay inside `through`.
  uint64_t flood(int from, uint64_t through) const {
    uint64_t reach = 0;
    uint64_t frontier = mask[from] & through;
    while (frontier) {
      reach |= frontier;
      uint64_t next = 0;
      for (uint64_t f = frontier; f; f &= f - 1) next |= mask[lowest(f)];
      frontier = next & through & ~reach;
    }
    return reach;
  }
};

struct CircuitSearch : SearchBase {
  const CircuitVisitor& visit;
  long long cap;
  bool strong;
  EnumResult result;
  bool aborted = false;
  std::vector<int> path;
  EdgeVector edges;

  CircuitSearch(const Graph& graph, const CircuitVisitor& v, long long cap_, bool strong_)
      : SearchBase(graph), visit(v), cap(cap_), strong(strong_),
        path(n, -1), edges(graph.edge_count()) {}

  // Necessary conditions for extending the path 0..u over the unvisited
  // set `rest` (nonempty) into a Hamilton circuit.
  bool infeasible(int u, uint64_t rest) const {
    const uint64_t ubit = 1ull << u;
    // The closing edge at 0 comes from the vertex placed last, which is
    // still in rest.
    if (!(mask[0] & rest)) return true;
    if (flood(u, rest) != rest) return true;

    const uint64_t avail_base = rest | ubit | 1ull;
    const bool u_is_anchor = u == 0;
    int forced_u = 0, forced_0 = 0;
    uint64_t forced_adj[kMaxSearchVertices];
    if (strong) std::fill_n(forced_adj, n, 0ull);

    for (uint64_t it = rest; it; it &= it - 1) {
      const int w = lowest(it);
      const uint64_t avail = mask[w] & avail_base;
      const int c = std::popcount(avail);
      if (c < 2) return true;
      if (c == 2) {
        // Both of w's circuit edges are pinned down.
        if (!u_is_anchor) {
          if (avail & ubit) ++forced_u;
          if (avail & 1ull) ++forced_0;
          // u-w-0 would close the circuit with rest\{w} stranded.
          if (avail == (ubit | 1ull) && rest != (1ull << w)) return true;
        } else if (avail & 1ull) {
          ++forced_0;
        }
        if (strong) {
          forced_adj[w] |= avail;
          for (uint64_t ai = avail; ai; ai &= ai - 1) forced_adj[lowest(ai)] |= 1ull << w;
        }
      }
    }
    // The anchor takes one closing edge (two edges total when u == 0), u
    // takes one forward edge.
    if (u_is_anchor) {
      if (forced_0 > 2) return true;
    } else {
      if (forced_u > 1 || forced_0 > 1) return true;
    }
    if (strong) {
      for (uint64_t it = rest; it; it &= it - 1) {
        const int w = lowest(it);
        if (std::popcount(forced_adj[w]) > 2) return true;
      }
      if (!u_is_anchor && std::popcount(forced_adj[u]) > 1) return true;
      if (std::popcount(forced_adj[0]) > (u_is_anchor ? 2 : 1)) return true;
    }
    return false;
  }

  void dfs(int u, uint64_t used, int depth) {
    if (depth == n) {
      if ((mask[u] & 1ull) && path[1] < u) {
        const int closing = edge(0, u);
        edges.set(closing);
        ++result.visited;
        bool keep_going = visit(edges);
        edges.reset(closing);
        if (!keep_going) {
          aborted = true;
        } else if (result.visited >= cap) {
          aborted = true;
          result.capped = true;
        }
      }
      return;
    }
    const uint64_t rest = all & ~used;
    if (infeasible(u, rest)) return;
    for (uint64_t cands = mask[u] & rest; cands; cands &= cands - 1) {
      const int v = lowest(cands);
      const int e = edge(u, v);
      path[depth] = v;
      edges.set(e);
      dfs(v, used | (1ull << v), depth + 1);
      edges.reset(e);
      if (aborted) return;
    }
  }

  EnumResult run() {
    if (cap <= 0) {
      result.capped = true;
      return result;
    }
    path[0] = 0;
    dfs(0, 1ull, 1);
    result.completed = !aborted;
    return result;
  }
};

struct LengthSearch : SearchBase {
  const CircuitVisitor& visit;
  long long cap;
  int length;
  int anchor = 0;
  uint64_t allowed = 0;
  EnumResult result;
  bool aborted = false;
  std::vector<int> path;
  EdgeVector edges;

  LengthSearch(const Graph& graph, int length_, const CircuitVisitor& v, long long cap_)
      : SearchBase(graph), visit(v), cap(cap_), length(length_),
        path(n, -1), edges(graph.edge_count()) {}

  void dfs(int u, uint64_t used, int depth) {
    if (depth == length) {
      if (edge(anchor, u) >= 0 && path[1] < u) {
        const int closing = edge(anchor, u);
        edges.set(closing);
        ++result.visited;
        bool keep_going = visit(edges);
        edges.reset(closing);
        if (!keep_going) {
          aborted = true;
        } else if (result.visited >= cap) {
          aborted = true;
          result.capped = true;
        }
      }
      return;
    }
    const uint64_t avail = allowed & ~used;
    const int remaining = length - depth;
    const uint64_t reach = flood(u, avail);
    if (std::popcount(reach) < remaining) return;
    if (!(mask[anchor] & reach)) return;
    for (uint64_t cands = mask[u] & avail; cands; cands &= cands - 1) {
      const int v = lowest(cands);
      const int e = edge(u, v);
      path[depth] = v;
      edges.set(e);
      dfs(v, used | (1ull << v), depth + 1);
      edges.reset(e);
      if (aborted) return;
    }
  }

  EnumResult run() {
    if (cap <= 0) {
      result.capped = true;
      return result;
    }
    for (anchor = 0; anchor + length <= n && !aborted; ++anchor) {
      allowed = all & ~((2ull << anchor) - 1);  // vertices strictly above anchor
      path[0] = anchor;
      dfs(anchor, 1ull << anchor, 1);
    }
    result.completed = !aborted;
    return result;
  }
};

// Spanning path search: cover every vertex, ending at `target`.
struct PathSearch : SearchBase {
  int target;
  bool found = false;

  PathSearch(const Graph& graph, int target_) : SearchBase(graph), target(target_) {}

  bool infeasible(int u, uint64_t rest) const {
    const uint64_t ubit = 1ull << u;
    const uint64_t tbit = 1ull << target;
    const uint64_t interior = rest & ~tbit;
    if (interior) {
      if ((flood(u, interior) & interior) != interior) return true;
      if (!(mask[target] & interior)) return true;
    } else {
      return !(mask[target] & ubit);
    }
    const uint64_t avail_base = rest | ubit;
    int forced_u = 0, forced_t = 0;
    for (uint64_t it = interior; it; it &= it - 1) {
      const int w = lowest(it);
      const uint64_t avail = mask[w] & avail_base;
      const int c = std::popcount(avail);
      if (c < 2) return true;
      if (c == 2) {
        if (avail & ubit) ++forced_u;
        if (avail & tbit) ++forced_t;
        if (avail == (ubit | tbit) && interior != (1ull << w)) return true;
      }
    }
    return forced_u > 1 || forced_t > 1;
  }

  void dfs(int u, uint64_t used) {
    if (found) return;
    const uint64_t rest = all & ~used;
    if (!rest) {
      found = u == target;
      return;
    }
    if (infeasible(u, rest)) return;
    uint64_t cands = mask[u] & rest;
    if (rest != (1ull << target)) cands &= ~(1ull << target);
    for (; cands && !found; cands &= cands - 1) {
      const int v = lowest(cands);
      dfs(v, used | (1ull << v));
    }
  }

  bool run(int start) {
    dfs(start, 1ull << start);
    return found;
  }
};

bool exists_spanning_path(const Graph& g, int a, int b) {
  PathSearch search(g, b);
  return search.run(a);
}

}  // namespace

EnumResult enumerate_hamilton_circuits(const Graph& g, const CircuitVisitor& visit,
                                       long long cap, bool strong_pruning) {
  if (g.vertex_count() < 3)
    throw std::invalid_argument("enumerate_hamilton_circuits requires n >= 3");
  CircuitSearch search(g, visit, cap, strong_pruning);
  return search.run();
}

EnumResult enumerate_circuits_of_length(const Graph& g, int length,
                                        const CircuitVisitor& visit, long long cap) {
  if (length < 3 || length > g.vertex_count())
    throw std::invalid_argument("circuit length out of range");
  LengthSearch search(g, length, visit, cap);
  return search.run();
}

std::vector<EdgeVector> circuits_of_length(const Graph& g, int length, long long cap) {
  std::vector<EdgeVector> out;
  auto result = enumerate_circuits_of_length(
      g, length, [&](const EdgeVector& c) { out.push_back(c); return true; }, cap);
  if (!result.completed)
    throw enumeration_limit("circuit enumeration capped before completion");
  return out;
}

std::string to_string(HamStatus::Kind kind) {
  switch (kind) {
    case HamStatus::Kind::VacuousNoCycle: return "vacuous-no-cycle";
    case HamStatus::Kind::Full: return "full";
    case HamStatus::Kind::Deficient: return "deficient";
    case HamStatus::Kind::NoHamiltonCircuit: return "no-hamilton-circuit";
    case HamStatus::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

HamStatus hamilton_generated_status(const Graph& g, long long cap) {
  HamStatus status;
  const int components = connected_component_count(g);
  status.cycle_space_dim = g.edge_count() - g.vertex_count() + components;
  if (status.cycle_space_dim == 0) {
    status.kind = HamStatus::Kind::VacuousNoCycle;
    status.completed = true;
    return status;
  }
  status.quotient = status.cycle_space_dim;
  if (components > 1 || g.vertex_count() < 3) {
    status.kind = HamStatus::Kind::NoHamiltonCircuit;
    status.completed = true;
    return status;
  }
  if (g.vertex_count() > kMaxSearchVertices) {
    status.kind = HamStatus::Kind::Unknown;
    return status;
  }

  Gf2Basis basis(g.edge_count());
  const int dim = status.cycle_space_dim;
  auto result = enumerate_hamilton_circuits(
      g,
      [&](const EdgeVector& circuit) {
        basis.insert(circuit);
        return basis.rank() < dim;
      },
      cap);
  status.rank = basis.rank();
  status.quotient = dim - basis.rank();
  status.circuits_examined = result.visited;
  status.completed = result.completed;
  if (status.rank == dim) {
    status.kind = HamStatus::Kind::Full;
    status.early_stopped = !result.completed;
  } else if (result.capped) {
    status.kind = HamStatus::Kind::Unknown;
  } else if (result.visited == 0) {
    status.kind = HamStatus::Kind::NoHamiltonCircuit;
  } else {
    status.kind = HamStatus::Kind::Deficient;
  }
  return status;
}

bool near_hamilton_span_full(const Graph& g, long long cap) {
  const int dim = cycle_space_dim(g);
  if (dim == 0) return true;
  const int n = g.vertex_count();
  Gf2Basis basis(g.edge_count());
  long long budget = cap;
  for (int length : {n, n - 1}) {
    if (length < 3) continue;
    auto result = enumerate_circuits_of_length(
        g, length,
        [&](const EdgeVector& circuit) {
          basis.insert(circuit);
          return basis.rank() < dim;
        },
        budget);
    if (basis.rank() == dim) return true;
    if (result.capped)
      throw enumeration_limit("near-Hamilton span undecided within cap");
    budget -= result.visited;
  }
  return false;
}

bool is_hamilton_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("is_hamilton_connected requires n >= 2");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!exists_spanning_path(g, a, b)) return false;
  return true;
}

bool long_path_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("long_path_connected requires n >= 2");
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (exists_spanning_path(g, a, b)) continue;
      bool near = false;
      for (int v = 0; v < n && !near; ++v) {
        if (v == a || v == b) continue;
        Graph h = delete_vertex(g, v);
        near = exists_spanning_path(h, a - (a > v), b - (b > v));
      }
      if (!near) return false;
    }
  }
  return true;
}

MClassReport m_class_membership(const Graph& g, long long cap) {
  MClassReport report;
  const int n = g.vertex_count();
  if (n < 2) return report;
  const bool ham_conn = is_hamilton_connected(g);
  if (ham_conn) {
    HamStatus status = hamilton_generated_status(g, cap);
    if (status.kind == HamStatus::Kind::Unknown)
      throw enumeration_limit("m_class_membership undecided within cap");
    const bool generated = status.kind == HamStatus::Kind::Full ||
                           status.kind == HamStatus::Kind::VacuousNoCycle;
    report.in_m_ham_0 = generated;
    report.in_m_ham_1 = status.kind == HamStatus::Kind::Deficient && status.quotient == 1;
  }
  if (long_path_connected(g)) report.in_m_near_0 = near_hamilton_span_full(g, cap);
  return report;
}

}  // namespace hamspan
