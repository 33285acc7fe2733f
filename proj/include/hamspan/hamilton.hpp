#ifndef HAMSPAN_HAMILTON_HPP
#define HAMSPAN_HAMILTON_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"

namespace hamspan {

inline constexpr long long kDefaultCircuitCap = 10'000'000;
// Exhaustive searches use single-word vertex masks.
inline constexpr int kMaxSearchVertices = 64;

// Raised when an exhaustive search cannot deliver a definite answer within
// its limits (vertex-count ceiling or visit cap). Callers that can report
// three-valued outcomes catch this and map it to Unknown.
struct enumeration_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumResult {
  long long visited = 0;   // circuits delivered to the visitor
  bool completed = false;  // search space exhausted
  bool capped = false;     // aborted by the visit cap
};

// Return true to continue enumeration.
using CircuitVisitor = std::function<bool(const EdgeVector&)>;

// Visits every Hamilton circuit exactly once, in canonical form: the
// traversal starts at vertex 0 and of the two directions takes the one
// whose second vertex is smaller. Prunes on disconnection of the unvisited
// region, on unvisited vertices with fewer than two usable neighbors, and
// on over-subscribed endpoints. The optional strong_pruning flag adds
// forced-edge counting at interior vertices; it never changes the set of
// circuits visited.
EnumResult enumerate_hamilton_circuits(const Graph& g, const CircuitVisitor& visit,
                                       long long cap = kDefaultCircuitCap,
                                       bool strong_pruning = false);

// Visits every circuit on exactly `length` vertices once, anchored at its
// minimum vertex with the direction tie-broken by the smaller neighbor.
EnumResult enumerate_circuits_of_length(const Graph& g, int length,
                                        const CircuitVisitor& visit,
                                        long long cap = kDefaultCircuitCap);

std::vector<EdgeVector> circuits_of_length(const Graph& g, int length,
                                           long long cap = kDefaultCircuitCap);

struct HamStatus {
  enum class Kind {
    VacuousNoCycle,     // forest: trivial cycle space
    Full,               // Hamilton circuits span Z_1
    Deficient,          // enumeration exhausted below full rank
    NoHamiltonCircuit,  // nontrivial Z_1 but H(G) is empty
    Unknown,            // cap or size limit hit before a verdict
  };
  Kind kind = Kind::Unknown;
  int cycle_space_dim = 0;
  int rank = 0;      // rank of the circuits streamed so far
  int quotient = 0;  // cycle_space_dim - rank (a verdict only when not Unknown)
  long long circuits_examined = 0;
  bool early_stopped = false;  // stopped once the rank saturated
  bool completed = false;      // enumeration ran to exhaustion
};

std::string to_string(HamStatus::Kind kind);

// Streams Hamilton circuits into a GF(2) basis, stopping as soon as the
// rank reaches dim Z_1. Forests are VacuousNoCycle without searching;
// disconnected graphs are NoHamiltonCircuit; graphs too large for exact
// search come back Unknown.
HamStatus hamilton_generated_status(const Graph& g, long long cap = kDefaultCircuitCap);

// True iff the circuits of length n and n-1 together span Z_1. Throws
// enumeration_limit when undecided within the cap.
bool near_hamilton_span_full(const Graph& g, long long cap = kDefaultCircuitCap);

// Spanning path between every vertex pair. n >= 2.
bool is_hamilton_connected(const Graph& g);
// Path on at least n-1 vertices between every vertex pair. n >= 2.
bool long_path_connected(const Graph& g);

struct MClassReport {
  bool in_m_ham_0 = false;   // Hamilton-connected and Hamilton-generated
  bool in_m_ham_1 = false;   // Hamilton-connected and quotient exactly 1
  bool in_m_near_0 = false;  // long-path-connected and near-Hamilton span full
};

MClassReport m_class_membership(const Graph& g, long long cap = kDefaultCircuitCap);

}  // namespace hamspan

#endif
