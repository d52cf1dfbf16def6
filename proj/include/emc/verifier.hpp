#pragma once

#include "emc/constructions.hpp"
#include "emc/fractional.hpp"
#include "emc/hypergraph.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace emc {

struct MaxEdgesResult {
  int max_edges = 0;
  Hypergraph witness;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Largest stable k-graph on [n] with nu <= s, by depth-first search over
/// down-sets of the dominance order. `budget` caps node expansions; when
/// it runs out `exhausted` is false and the result is only a lower bound.
/// Supports C(n,k) <= 512. The incumbent starts from H_1 and H_k unless
/// `seed_constructions` is false.
MaxEdgesResult max_edges_given_nu(int n, int k, int s, std::uint64_t budget, bool seed_constructions = true);

struct EmcReport {
  int n = 0, k = 0, s = 0;
  int oracle = 0;
  BoundReport formula;
  bool match = false;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  double wall_time_ms = 0;
  Hypergraph witness;
};

EmcReport verify_emc(int n, int k, int s, std::uint64_t budget);

struct ExtremalProfile {
  int n = 0;
  int s = 0;
  int m = 0;
  Rational nu_star;
  FractionalCover cover;
  Rational a, b, mu, beta;
  std::map<std::vector<Vertex>, Integer> link_sizes;  // A within [s+1], |A| <= 1
  Integer lhs_lowerbound;
  Rational rhs_lowerbound;
  bool lowerbound_holds = false;
  bool cover_sorted = false;          // weights nonincreasing on [n]
  bool sorted_cover_feasible = false;
  bool support_ok = false;            // omega(i) = 0 for i > 4 nu*
  Integer edges;
};

struct ProfilePair {
  ExtremalProfile raw;
  ExtremalProfile saturated;  // G plus every 4-set of cover weight >= 1
};

class ProfileError : public std::invalid_argument {
 public:
  ProfileError(const std::string& what, Rational nu) : std::invalid_argument(what), nu_star(std::move(nu)) {}
  Rational nu_star;
};

/// Cover-derived quantities of a stable 4-graph G with nu*(G) <= s.
ExtremalProfile extremal_profile(const Hypergraph& g, int s, const Rational& epsilon);
ProfilePair extremal_profiles(const Hypergraph& g, int s, const Rational& epsilon);

/// Adds every 4-set whose cover weight is at least 1.
Hypergraph saturate(const Hypergraph& g, const FractionalCover& cover);

/// Largest |F(A)| - C(n-s-1, 4-|A|) over A in [s+1] with 2 <= |A| <= 4;
/// nonpositive when the link-size cap holds.
Integer link_cap_excess(const Hypergraph& g, int s);

struct ScanCorpus {
  int perturbed = 8;      // H_1 minus random edges, stabilized
  int mixed = 8;          // plus a few random outside edges, stabilized
  int max_extra_edges = 3;
};

struct ScanRow {
  std::string origin;
  Integer edges;
  int nu = 0;
  bool nu_ok = false;
  bool near_extremal = false;
  Integer missing;
  Rational ratio;  // |E(H_1) - E(G)| / n^4
  bool close = false;  // at 400 eps^(1/4)
};

struct ScanReport {
  int n = 0, s = 0;
  Rational epsilon;
  Rational epsilon_quarter;
  std::uint64_t seed = 0;
  std::vector<ScanRow> rows;
};

/// Empirical closeness of near-extremal stable 4-graphs to H_1. epsilon
/// must be the fourth power of a rational.
ScanReport stability_scan(int n, int s, const Rational& epsilon, const ScanCorpus& corpus, std::uint64_t seed);

/// Edges of the k-subsets of [n] ordered by (label sum, lex), a linear
/// extension of the dominance order.
std::vector<Edge> dominance_order(int n, int k);

/// splitmix64 finalizer, used to derive per-copy seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace emc
