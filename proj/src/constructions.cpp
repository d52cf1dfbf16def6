#include "emc/constructions.hpp"

#include "emc/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace emc {

const char* to_string(Winner w) {
  switch (w) {
    case Winner::cover: return "cover";
    case Winner::clique: return "clique";
    case Winner::tie: return "tie";
  }
  return "?";
}

BoundReport emc_bound(int n, int k, int s) {
  if (k < 1 || s < 0 || n < 0) throw std::invalid_argument("emc_bound requires k >= 1, s >= 0, n >= 0");
  BoundReport r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.cover_term = binomial(n, k) - (n - s >= 0 ? binomial(n - s, k) : Integer(0));
  r.clique_term = binomial(static_cast<long>(s) * k + k - 1, k);
  r.emc_bound = std::max(r.cover_term, r.clique_term);
  r.winner = r.cover_term > r.clique_term ? Winner::cover
             : r.cover_term < r.clique_term ? Winner::clique
                                            : Winner::tie;
  r.in_range = n >= k * (s + 1);
  return r;
}

Hypergraph build_Hi(int n, int k, int s, int i) {
  if (k < 1 || i < 1 || i > k) throw std::invalid_argument("build_Hi requires 1 <= i <= k");
  if (s < 0) throw std::invalid_argument("build_Hi requires s >= 0");
  if (n < k * (s + 1)) throw std::invalid_argument("build_Hi requires n >= k(s+1)");
  const int prefix = i * (s + 1) - 1;
  std::vector<Edge> edges;
  auto ground = iota_vertices(1, n);
  for_each_subset(ground, k, [&](std::span<const int> e) {
    int inside = 0;
    for (int v : e) inside += v <= prefix;
    if (inside >= i) edges.emplace_back(e.begin(), e.end());
    return true;
  });
  return Hypergraph(n, k, std::move(edges));
}

namespace {

Hypergraph build_capped(const std::vector<Vertex>& u, const std::vector<Vertex>& w, int k, int p) {
  std::vector<Vertex> su = u, sw = w;
  std::sort(su.begin(), su.end());
  std::sort(sw.begin(), sw.end());
  std::vector<Vertex> common;
  std::set_intersection(su.begin(), su.end(), sw.begin(), sw.end(), std::back_inserter(common));
  if (!common.empty()) throw std::invalid_argument("U and W must be disjoint");
  std::vector<Vertex> ground;
  std::merge(su.begin(), su.end(), sw.begin(), sw.end(), std::back_inserter(ground));
  if (static_cast<int>(ground.size()) < k) throw std::invalid_argument("|U + W| must be at least k");
  const int n = ground.back();
  std::vector<Edge> edges;
  for_each_subset(ground, k, [&](std::span<const int> e) {
    int inside = 0;
    for (int v : e) inside += std::binary_search(su.begin(), su.end(), v);
    if (inside >= 1 && inside <= p) edges.emplace_back(e.begin(), e.end());
    return true;
  });
  if (static_cast<int>(ground.size()) == n) return Hypergraph(n, k, std::move(edges));
  return Hypergraph::with_ground_set(n, k, ground, std::move(edges));
}

}  // namespace

Hypergraph build_HUW(const std::vector<Vertex>& u, const std::vector<Vertex>& w, int k) {
  return build_capped(u, w, k, k);
}

Hypergraph build_HpUW(const std::vector<Vertex>& u, const std::vector<Vertex>& w, int k, int p) {
  if (p < 1 || p > k) throw std::invalid_argument("build_HpUW requires 1 <= p <= k");
  return build_capped(u, w, k, p);
}

namespace {

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Construction apex_extension(const Hypergraph& g, int t) {
  const int total = g.n() + t;
  const int k = g.k();
  std::vector<Edge> edges;
  auto ground = iota_vertices(1, total);
  for_each_subset(ground, k, [&](std::span<const int> e) {
    if (e.front() <= t) edges.emplace_back(e.begin(), e.end());
    return true;
  });
  for (const auto& e : g.edges()) {
    Edge moved = e;
    for (Vertex& v : moved) v += t;
    edges.push_back(std::move(moved));
  }
  return {Hypergraph(total, k, std::move(edges)), t};
}

}  // namespace

int construction1_t(int n, int s, const Rational& eta) {
  Rational value = Rational(n - 4 * s, 3) - eta * n;
  value.canonicalize();
  return static_cast<int>(floor_of(value).get_si());
}

Construction construction1(const Hypergraph& g, int s, const Rational& eta) {
  if (g.k() != 4) throw std::invalid_argument("construction1 requires a 4-graph");
  if (!g.full_ground_set()) throw std::invalid_argument("construction1 requires vertex set [n]");
  if (eta <= 0) throw std::invalid_argument("construction1 requires eta > 0");
  const int t = construction1_t(g.n(), s, eta);
  if (t < 0) throw std::invalid_argument("construction1: t = " + std::to_string(t) + " is negative");
  return apex_extension(g, t);
}

int construction2_t(int n, int k, int s) {
  if (k < 2) throw std::invalid_argument("construction2 requires k >= 2");
  const int num = n - k * s;
  const int q = num >= 0 ? num / (k - 1) : -((-num + k - 2) / (k - 1));
  return q - 1;
}

Construction construction2(const Hypergraph& g, int s) {
  if (!g.full_ground_set()) throw std::invalid_argument("construction2 requires vertex set [n]");
  const int t = construction2_t(g.n(), g.k(), s);
  if (t < 0) throw std::invalid_argument("construction2: t = " + std::to_string(t) + " is negative");
  return apex_extension(g, t);
}

ThresholdReport degree_threshold_formula(int n, int k, int d, int s) {
  if (d < 1 || d > k - 1) throw std::invalid_argument("degree threshold requires 1 <= d <= k-1");
  if (s < 0 || static_cast<long>(s) * k > n) throw std::invalid_argument("degree threshold requires 0 <= s <= n/k");
  ThresholdReport r;
  r.raw = binomial(n - d, k - d) - binomial(n - d - s + 1, k - d) + 1;
  r.clamped = r.raw < 0;
  r.value = r.clamped ? Integer(0) : r.raw;
  return r;
}

Rational kot_asymptotic(int n, int k, int d, int s) {
  if (n < 1 || d < 1 || d > k - 1 || s < 0) throw std::invalid_argument("kot_asymptotic parameters out of range");
  Rational ratio(n - s, n);
  ratio.canonicalize();
  return (1 - power(ratio, k - d)) * Rational(binomial(n - d, k - d));
}

Rational hpsko_threshold_coefficient(int k, int d) {
  if (d < 1 || d > k - 1) throw std::invalid_argument("hpsko coefficient requires 1 <= d <= k-1");
  Rational ratio(k - 1, k);
  ratio.canonicalize();
  Rational first = 1 - power(ratio, k - d);
  Rational half(1, 2);
  return first > half ? first : half;
}

}  // namespace emc
