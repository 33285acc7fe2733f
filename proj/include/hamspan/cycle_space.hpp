#ifndef HAMSPAN_CYCLE_SPACE_HPP
#define HAMSPAN_CYCLE_SPACE_HPP

#include <vector>

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"

namespace hamspan {

// Fundamental cycles of a deterministic BFS spanning forest: one vector per
// non-tree edge, each the edge set of a single circuit. dimension is
// m - n + (#components).
struct CycleBasis {
  int dimension = 0;
  std::vector<EdgeVector> fundamental;
};

int cycle_space_dim(const Graph& g);

// BFS forest rooted at the lowest-index vertex of each component, neighbors
// visited in increasing order, so the basis is identical across runs.
CycleBasis fundamental_cycle_basis(const Graph& g);

// Membership in Z_1(G; F_2), decided twice: by the even-degree criterion on
// the support and by span membership in the fundamental basis. The two
// routes must agree (std::logic_error otherwise).
bool is_cycle(const Graph& g, const EdgeVector& v);

// dim Z_1 minus the GF(2) rank of the generators. Every generator must lie
// in Z_1 (checked; std::invalid_argument otherwise). Zero means the
// generators span the cycle space.
int quotient_dim(const Graph& g, const std::vector<EdgeVector>& generators);

}  // namespace hamspan

#endif
