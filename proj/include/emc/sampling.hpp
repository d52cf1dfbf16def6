#pragma once

#include "emc/fractional.hpp"
#include "emc/hypergraph.hpp"
#include "emc/matching.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace emc {

inline constexpr const char* sampling_generator_id = "mt19937_64+splitmix64/v1";

struct CopyPartition {
  std::vector<Vertex> t;  // [t] & R
  std::vector<Vertex> v;  // ([t+s] \ [t]) & R
  std::vector<Vertex> w;  // R \ T
};

struct SampleBatch {
  int n_base = 0;  // n; the ground set has n + t vertices
  int k = 0;
  int t = 0;
  int s = 0;
  std::uint64_t seed = 0;
  Rational p_exponent = make_rational(-9, 10);
  double probability = 0;  // n^(-9/10)
  std::vector<Vertex> ground;
  std::vector<std::vector<Vertex>> copies;  // trimmed, ascending
  std::vector<std::size_t> raw_sizes;       // before trimming
  std::vector<CopyPartition> partitions;
};

/// Independent vertex samples R^i of V(H) at rate n^(-9/10), n = |V(H)| - t,
/// each trimmed by its largest vertices to a multiple of k. Copy i draws from
/// its own generator seeded with splitmix64(seed + i * golden).
SampleBatch sample_batch(const Hypergraph& h, int t, int copies, std::uint64_t seed, int s = 0);
/// Same on the implicit ground set [n + t] for a k-graph that is not stored.
SampleBatch sample_batch(int n, int k, int t, int s, int copies, std::uint64_t seed);

/// Y_A = number of copies containing A, for each probe.
std::map<std::vector<Vertex>, int> incidence_stats(const SampleBatch& batch, const std::vector<std::vector<Vertex>>& probes);

struct IncidenceSummary {
  double expected_singleton = 0;  // copies * p
  double mean_singleton = 0;
  int min_singleton = 0, max_singleton = 0;
  std::size_t pairs_y_ge_3 = 0;   // pairs inside >= 3 copies
  std::size_t edges_y_ge_2 = 0;   // edges of H inside >= 2 copies (explicit H only)
  double mean_raw_size = 0;
  double expected_raw_size = 0;   // |V(H)| * p
};
IncidenceSummary summarize_incidence(const SampleBatch& batch, const Hypergraph* h = nullptr);

struct RoundingReport {
  Hypergraph sparse;
  std::size_t candidates = 0;  // edges with weight and Y_e = 1
  std::size_t kept = 0;
  std::map<std::size_t, std::size_t> degree_histogram;  // degree -> vertex count
  std::size_t max_codegree = 0;
  double degree_target = 0;    // n^(1/5)
  double codegree_target = 0;  // n^(1/10)
};

/// Keeps each edge e that lies in exactly one copy R^i with probability
/// w^i(e), drawn exactly. pfms[i] must be a perfect fractional matching of
/// H[R^i]. Copy i uses splitmix64(seed + i * golden).
RoundingReport round_to_sparse(const Hypergraph& h, const SampleBatch& batch,
                               const std::vector<FractionalMatching>& pfms, std::uint64_t seed);
/// Rounding for the complete k-graph on the batch ground set, with the
/// uniform perfect fractional matching on every copy (weight 1/C(|R|-1,k-1)).
RoundingReport round_complete(const SampleBatch& batch, std::uint64_t seed);

struct GreedyMatching {
  MatchingWitness matching;
  std::size_t uncovered = 0;
};
/// Maximal matching scanning edges in lexicographic order.
GreedyMatching greedy_near_perfect_matching(const Hypergraph& h);

}  // namespace emc
