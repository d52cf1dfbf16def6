#pragma once

#include "emc/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace emc {

struct MatchingWitness {
  std::vector<Edge> edges;
  int size = 0;
};

struct MatchingResult {
  int nu = 0;
  MatchingWitness witness;
  std::uint64_t nodes = 0;
};

/// Exact matching number by branch and bound. Requires n <= 64.
MatchingResult matching_number(const Hypergraph& h);

/// Early-exit variant: a witness of exactly s edges, if nu(H) >= s.
std::optional<MatchingWitness> has_matching_of_size(const Hypergraph& h, int s);

/// Exact vertex cover number. Requires n <= 64.
int cover_number(const Hypergraph& h);

/// Edges pairwise disjoint and all present in H.
bool is_valid_matching(const Hypergraph& h, const std::vector<Edge>& edges);

}  // namespace emc
