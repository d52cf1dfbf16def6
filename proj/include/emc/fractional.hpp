#pragma once

#include "emc/hypergraph.hpp"
#include "emc/simplex.hpp"

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace emc {

struct FractionalMatching {
  int k = 0;
  std::map<Edge, Rational> weights;   // positive weights only
  std::map<Vertex, Rational> loads;   // every ground vertex, zero included
  Rational size;
};

struct FractionalCover {
  std::map<Vertex, Rational> weights;  // every ground vertex
  Rational size;
  std::set<Vertex> support;
};

/// Builds a matching from edge weights, recomputing loads and size. Zero
/// weights are dropped.
FractionalMatching make_fractional_matching(const Hypergraph& h, const std::map<Edge, Rational>& weights);
FractionalCover make_fractional_cover(const Hypergraph& h, const std::map<Vertex, Rational>& weights);

bool is_feasible(const Hypergraph& h, const FractionalMatching& fm);
bool is_feasible(const Hypergraph& h, const FractionalCover& fc);

struct FractionalMatchingResult {
  Rational nu_star;
  FractionalMatching fm;
};

struct FractionalCoverResult {
  Rational tau_star;
  FractionalCover fc;
};

FractionalMatchingResult fractional_matching_number(const Hypergraph& h, std::ostream* trace = nullptr);

/// Minimum fractional cover, solved from the cover program itself. Among the
/// optimal covers the one with lexicographically greatest weight vector
/// (in ground-set order) is returned.
FractionalCoverResult fractional_cover_number(const Hypergraph& h, std::ostream* trace = nullptr);

/// The lexicographically greatest cover among covers of total `tau_star`.
FractionalCover lex_max_fractional_cover(const Hypergraph& h, const Rational& tau_star);

struct SlacknessReport {
  int support_size = 0;
  Rational bound;  // k * nu*
  bool saturated_ok = false;   // omega(i) > 0 implies load(i) = 1
  bool support_ok = false;     // |R| <= k * nu*
  bool sizes_equal = false;    // optimality of the pair
  std::vector<Vertex> violations;
};

SlacknessReport check_complementary_slackness(const FractionalMatching& fm, const FractionalCover& fc);

class TargetTooLarge : public std::invalid_argument {
 public:
  TargetTooLarge(const Rational& target, const Rational& nu_star);
  Rational nu_star;
};

/// Fractional matching of size exactly `target` whose loads are
/// lexicographically maximal along `order`. Throws TargetTooLarge when
/// target exceeds nu*.
FractionalMatching lex_max_fractional_matching(const Hypergraph& h, const std::vector<Vertex>& order,
                                               const Rational& target);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PerfectExtension {
  FractionalMatching fm;
  int q = 0;
  int ell = 0;
  int p = 0;
  int s_star = 0;
  std::vector<Edge> e0;
};

/// Extends a lex-max fractional matching of H - [t] to a perfect one on the
/// stable 4-graph H whose first t vertices have full degree. Throws
/// PreconditionError naming the failed hypothesis.
PerfectExtension extend_to_perfect_fm(const Hypergraph& h, int t, const FractionalMatching& fm);

/// nu*(H) == |V(H)| / k.
bool has_perfect_fm(const Hypergraph& h);

/// Boundary vertices: 0 < load < 1.
std::vector<Vertex> boundary_set(const FractionalMatching& fm);

}  // namespace emc
