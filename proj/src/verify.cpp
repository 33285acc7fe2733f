#include "hamspan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "hamspan/cycle_space.hpp"

namespace hamspan {

const std::array<std::array<int, 8>, 7> kReferenceCircuits = {{
    {0, 1, 4, 5, 2, 3, 6, 7},
    {0, 1, 6, 3, 4, 5, 2, 7},
    {0, 1, 4, 3, 2, 5, 6, 7},
    {0, 1, 2, 5, 4, 3, 6, 7},
    {0, 1, 6, 5, 2, 3, 4, 7},
    {0, 1, 2, 3, 6, 5, 4, 7},
    {0, 1, 2, 5, 6, 3, 4, 7},
}};

// Rows: edges 0,1 0,7 1,2 1,4 1,6 2,3 2,5 2,7 3,4 3,6 4,5 4,7 5,6 6,7.
const std::array<std::array<uint8_t, 7>, 14> kReferenceMatrix = {{
    {1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 1, 0, 1, 1},
    {1, 0, 1, 0, 0, 0, 0},
    {0, 1, 0, 0, 1, 0, 0},
    {1, 0, 1, 0, 1, 1, 0},
    {1, 1, 1, 1, 1, 0, 1},
    {0, 1, 0, 0, 0, 0, 0},
    {0, 1, 1, 1, 1, 0, 1},
    {1, 1, 0, 1, 0, 1, 1},
    {1, 1, 0, 1, 0, 1, 0},
    {0, 0, 0, 0, 1, 1, 1},
    {0, 0, 1, 0, 1, 1, 1},
    {1, 0, 1, 1, 0, 0, 0},
}};

EdgeVector circuit_vector(const Graph& g, const std::vector<int>& tour) {
  const int k = static_cast<int>(tour.size());
  if (k < 3) throw std::invalid_argument("circuit_vector: tour too short");
  std::set<int> distinct(tour.begin(), tour.end());
  if (static_cast<int>(distinct.size()) != k)
    throw std::invalid_argument("circuit_vector: repeated vertex in tour");
  EdgeVector v(g.edge_count());
  for (int i = 0; i < k; ++i) {
    int a = tour[i];
    int b = tour[(i + 1) % k];
    if (!g.has_edge(a, b)) throw std::invalid_argument("circuit_vector: missing edge in tour");
    v.set(g.edge_index(a, b));
  }
  return v;
}

std::string format_incidence_matrix(const Graph& g, const std::vector<EdgeVector>& columns) {
  std::vector<std::string> labels;
  labels.reserve(g.edge_count());
  for (auto [u, v] : g.edges())
    labels.push_back(std::to_string(u) + "," + std::to_string(v));
  return dump_matrix(labels, columns);
}

Prop4Report verify_proposition4() {
  Prop4Report report;
  Graph g = gen_k_hat(4);

  std::vector<EdgeVector> columns;
  report.seven_circuits_valid = true;
  for (const auto& tour : kReferenceCircuits) {
    try {
      columns.push_back(circuit_vector(g, std::vector<int>(tour.begin(), tour.end())));
    } catch (const std::invalid_argument&) {
      report.seven_circuits_valid = false;
      columns.emplace_back(g.edge_count());
    }
  }

  for (int row = 0; row < 14; ++row)
    for (int col = 0; col < 7; ++col)
      report.matrix[row][col] = columns[col].test(row) ? 1 : 0;
  report.matrix_matches_reference = report.matrix == kReferenceMatrix;

  report.rank = rank_of(columns);

  std::vector<EdgeVector> all_circuits;
  enumerate_hamilton_circuits(g, [&](const EdgeVector& c) {
    all_circuits.push_back(c);
    return true;
  });
  report.total_hamilton_circuits = static_cast<long long>(all_circuits.size());
  report.quotient = quotient_dim(g, all_circuits);
  report.full_span = report.quotient == 0;
  return report;
}

ConjectureResult test_conjecture5(int s, long long cap) {
  if (s < 3) throw std::invalid_argument("test_conjecture5 requires s >= 3");
  ConjectureResult out;
  out.s = s;
  const auto start = std::chrono::steady_clock::now();

  Graph g = gen_k_hat(s);
  const int dim = cycle_space_dim(g);
  out.status.cycle_space_dim = dim;
  Gf2Basis basis(g.edge_count());
  auto result = enumerate_hamilton_circuits(
      g, [&](const EdgeVector& c) { basis.insert(c); return true; }, cap);
  out.status.rank = basis.rank();
  out.status.quotient = dim - basis.rank();
  out.status.circuits_examined = result.visited;
  out.status.completed = result.completed;
  if (result.completed) {
    out.total_circuits = result.visited;
    if (basis.rank() == dim)
      out.status.kind = HamStatus::Kind::Full;
    else if (result.visited == 0)
      out.status.kind = HamStatus::Kind::NoHamiltonCircuit;
    else
      out.status.kind = HamStatus::Kind::Deficient;
  } else {
    out.status.kind = basis.rank() == dim ? HamStatus::Kind::Full : HamStatus::Kind::Unknown;
  }

  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start).count();
  return out;
}

Lemma3Result check_lemma3(const Graph& g, long long cap) {
  Lemma3Result result;
  if (g.vertex_count() == 0) return result;
  StructuralReport s = structural_predicates(g);
  if (s.is_forest || s.is_circuit || s.degree2_vertices.empty()) return result;
  HamStatus status = hamilton_generated_status(g, cap);
  if (status.kind != HamStatus::Kind::Full) return result;
  for (int v : s.degree2_vertices) {
    if (!is_bipartite(delete_vertex(g, v))) {
      result.outcome = Lemma3Outcome::Counterexample;
      result.counterexample_vertex = v;
      return result;
    }
  }
  result.outcome = Lemma3Outcome::Pass;
  return result;
}

bool check_all_or_none(const Graph& g, int v, long long cap) {
  if (v < 0 || v >= g.vertex_count() || g.degree(v) != 2)
    throw std::invalid_argument("check_all_or_none requires a degree-2 vertex");

  // Edges of the degree-2 chain through v, extended in both directions up
  // to the first vertex of degree >= 3. Interior chain vertices force any
  // circuit touching one chain edge to traverse them all.
  EdgeVector chain(g.edge_count());
  auto walk = [&](int first) {
    int prev = v, cur = first;
    chain.set(g.edge_index(prev, cur));
    while (g.degree(cur) == 2) {
      if (cur == v)
        throw std::invalid_argument("check_all_or_none: component is a single circuit");
      int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      chain.set(g.edge_index(cur, next));
      prev = cur;
      cur = next;
    }
  };
  walk(g.neighbors(v)[0]);
  walk(g.neighbors(v)[1]);

  const int chain_size = chain.popcount();
  bool all_or_none = true;
  long long budget = cap;
  for (int length = 3; length <= g.vertex_count() && all_or_none; ++length) {
    auto result = enumerate_circuits_of_length(
        g, length,
        [&](const EdgeVector& circuit) {
          EdgeVector overlap = circuit;
          overlap ^= chain;
          // |circuit ∩ chain| from |Δ|: must be 0 or chain_size.
          int inter = (circuit.popcount() + chain_size - overlap.popcount()) / 2;
          if (inter != 0 && inter != chain_size) {
            all_or_none = false;
            return false;
          }
          return true;
        },
        budget);
    if (!all_or_none) break;
    if (result.capped) throw enumeration_limit("check_all_or_none capped");
    budget -= result.visited;
  }
  return all_or_none;
}

}  // namespace hamspan
