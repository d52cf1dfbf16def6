#pragma once

#include "emc/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace emc {

using Vertex = int;
/// A hyperedge: strictly ascending 1-based vertex labels.
using Edge = std::vector<Vertex>;

/// A k-uniform edge family on a ground set of labels drawn from [1, n].
///
/// Edges are stored ascending, deduplicated and in lexicographic order, so
/// two hypergraphs with the same edges compare equal and iterate alike. The
/// ground set defaults to [n]; derived graphs (induced subgraphs, traces)
/// keep the original labels and carry a smaller ground set instead of
/// relabelling.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and canonicalizes raw edges. Requires 1 <= k <= n.
  Hypergraph(int n, int k, std::vector<Edge> raw_edges);

  /// Same as the constructor but with an explicit ground set; allows k = 0
  /// (traces through a full edge produce the family {{}}).
  static Hypergraph with_ground_set(int n, int k, std::vector<Vertex> ground,
                                    std::vector<Edge> raw_edges);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& vertices() const { return ground_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool full_ground_set() const { return static_cast<int>(ground_.size()) == n_; }

  bool contains(std::span<const Vertex> edge) const;
  std::size_t degree(Vertex v) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Vertex> ground_;
  std::vector<Edge> edges_;
};

/// All k-subsets of [n].
Hypergraph complete_hypergraph(int n, int k);

/// True iff H is closed under coordinatewise dominance. Single-coordinate
/// decrements suffice because dominance is their transitive closure.
bool is_stable(const Hypergraph& h);

/// The (k-1)-shadow. Throws for k < 2.
Hypergraph shadow(const Hypergraph& f);

/// {e \ A : e in E(H), e meets S exactly in A}; ground set V(H) \ S.
Hypergraph trace_family(const Hypergraph& h, std::span<const Vertex> a, std::span<const Vertex> s);

/// Edges inside W, on ground set W.
Hypergraph induced(const Hypergraph& h, std::span<const Vertex> w);

struct ClosenessReport {
  Integer missing_count;
  Rational normalizer;  // n^k
  Rational ratio;
  Rational epsilon;
  bool is_close = false;
};

/// |E(H) \ E(G)| against epsilon * n^k. Asymmetric: G is the graph being
/// tested, H the reference.
ClosenessReport closeness(const Hypergraph& g, const Hypergraph& h, const Rational& epsilon);

struct MinDegree {
  Integer value;
  std::vector<Vertex> witness;
};

/// Minimum d-degree over d-subsets of the ground set, with the
/// lexicographically least minimizing witness. Requires 1 <= d <= k-1.
MinDegree min_d_degree(const Hypergraph& h, int d);

/// Parses the line-oriented `.khg` format.
Hypergraph parse_khg(const std::string& text);
Hypergraph read_khg(std::istream& in);
Hypergraph load_khg(const std::string& path);

/// Canonical `.khg` text: header line then one edge per line.
std::string to_khg(const Hypergraph& h);
void save_khg(const Hypergraph& h, const std::string& path);

std::string edge_to_string(std::span<const Vertex> e);

}  // namespace emc
