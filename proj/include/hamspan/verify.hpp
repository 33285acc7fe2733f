#ifndef HAMSPAN_VERIFY_HPP
#define HAMSPAN_VERIFY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hamspan/graph.hpp"
#include "hamspan/hamilton.hpp"

namespace hamspan {

// The seven reference Hamilton circuits of K^{4-hat,3}, as vertex tours.
extern const std::array<std::array<int, 8>, 7> kReferenceCircuits;
// Their edge-incidence matrix, rows in lexicographic edge order, one column
// per circuit. Transcribed golden data; never regenerated.
extern const std::array<std::array<uint8_t, 7>, 14> kReferenceMatrix;

struct Prop4Report {
  bool seven_circuits_valid = false;
  std::array<std::array<uint8_t, 7>, 14> matrix{};
  bool matrix_matches_reference = false;
  int rank = 0;
  long long total_hamilton_circuits = 0;
  int quotient = -1;
  bool full_span = false;

  bool all_ok() const {
    return seven_circuits_valid && matrix_matches_reference && rank == 7 &&
           total_hamilton_circuits == 12 && full_span;
  }
};

// Rebuilds K^{4-hat,3}, validates the seven reference circuits, reproduces
// their incidence matrix bit for bit, computes its GF(2) rank, and checks
// that the full set of Hamilton circuits spans the cycle space. Mismatches
// are reported in the result, never thrown.
Prop4Report verify_proposition4();

// Edge set of the closed tour v0 v1 ... vk v0; validates that the tour is a
// circuit visiting distinct vertices along existing edges.
EdgeVector circuit_vector(const Graph& g, const std::vector<int>& tour);

// Text rendering of an edge-incidence matrix with "u,v" row labels.
std::string format_incidence_matrix(const Graph& g, const std::vector<EdgeVector>& columns);

struct ConjectureResult {
  int s = 0;
  HamStatus status;
  long long total_circuits = -1;  // exact count when enumeration completed
  double wall_ms = 0.0;
};

// Exhaustively decides whether H(K^{s-hat,s-1}) spans the cycle space.
// Counts all circuits (no early stop) so the record carries the exact
// census. Cap exhaustion comes back as Kind::Unknown.
ConjectureResult test_conjecture5(int s, long long cap = kDefaultCircuitCap);

enum class Lemma3Outcome { Pass, Inapplicable, Counterexample };

struct Lemma3Result {
  Lemma3Outcome outcome = Lemma3Outcome::Inapplicable;
  int counterexample_vertex = -1;
};

// For a graph that is neither forest nor circuit, is Hamilton-generated
// (Full), and has a degree-2 vertex: every degree-2 deletion must leave a
// bipartite graph. Hypothesis failures (including an Unknown generation
// status) are Inapplicable.
Lemma3Result check_lemma3(const Graph& g, long long cap = kDefaultCircuitCap);

// The degree-2 chain through v (maximal induced path of degree-2 vertices,
// extended one edge past each end): every circuit must contain all of its
// edges or none. Checked by exhaustive circuit enumeration over all
// lengths. v must have degree 2.
bool check_all_or_none(const Graph& g, int v, long long cap = kDefaultCircuitCap);

}  // namespace hamspan

#endif
