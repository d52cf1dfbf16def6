#pragma once

#include "emc/hypergraph.hpp"

#include <utility>
#include <vector>

namespace emc {

/// The (i,j) exchange: every edge holding j but not i moves to
/// (e - j) + i unless that set is already an edge. Requires i < j.
Hypergraph shift_ij(const Hypergraph& h, Vertex i, Vertex j);

struct StabilizeResult {
  Hypergraph stable;
  std::vector<std::pair<Vertex, Vertex>> log;  // effective shifts, in order
  std::vector<long long> potential;            // label sum after each logged shift
};

/// Repeated lexicographic sweeps over (i,j) until a full pass changes
/// nothing. The sweep order is fixed; other orders may give other families.
StabilizeResult stabilize(const Hypergraph& h);

/// Sum of all vertex labels over all edges.
long long label_sum(const Hypergraph& h);

}  // namespace emc
