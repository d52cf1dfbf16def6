#pragma once

// Generators and brute-force oracles shared by the unit tests. The oracles
// deliberately avoid the library's search code.

#include "emc/combinatorics.hpp"
#include "emc/fractional.hpp"
#include "emc/hypergraph.hpp"
#include "emc/random.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace test {

using emc::Edge;
using emc::Hypergraph;

inline std::vector<Edge> all_ksets(int n, int k) {
  std::vector<Edge> out;
  const auto ground = emc::iota_vertices(1, n);
  emc::for_each_subset(ground, k, [&](std::span<const int> e) {
    out.emplace_back(e.begin(), e.end());
    return true;
  });
  return out;
}

/// Each k-subset of [n] kept independently with probability num/den.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int k, std::uint64_t num, std::uint64_t den) {
  std::vector<Edge> edges;
  for (auto& e : all_ksets(n, k))
    if (emc::uniform_below(rng, den) < num) edges.push_back(e);
  return Hypergraph(n, k, edges);
}

inline bool dominated(const Edge& a, const Edge& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// The down-set generated by `gens` random k-sets.
inline Hypergraph random_stable(std::mt19937_64& rng, int n, int k, int gens) {
  const auto all = all_ksets(n, k);
  std::vector<Edge> tops;
  for (int i = 0; i < gens; ++i) tops.push_back(all[emc::uniform_below(rng, all.size())]);
  std::vector<Edge> edges;
  for (const auto& e : all)
    if (std::any_of(tops.begin(), tops.end(), [&](const Edge& t) { return dominated(e, t); })) edges.push_back(e);
  return Hypergraph(n, k, edges);
}

inline std::uint64_t mask_of(const Edge& e) {
  std::uint64_t m = 0;
  for (int v : e) m |= std::uint64_t{1} << v;
  return m;
}

/// Matching number by plain recursion over the edge list.
inline int brute_nu(const std::vector<std::uint64_t>& masks, std::size_t from = 0, std::uint64_t used = 0) {
  int best = 0;
  for (std::size_t i = from; i < masks.size(); ++i)
    if ((masks[i] & used) == 0) best = std::max(best, 1 + brute_nu(masks, i + 1, used | masks[i]));
  return best;
}

inline int brute_nu(const Hypergraph& h) {
  std::vector<std::uint64_t> masks;
  for (const auto& e : h.edges()) masks.push_back(mask_of(e));
  return brute_nu(masks);
}

/// Smallest vertex cover by trying all vertex subsets in increasing size.
inline int brute_tau(const Hypergraph& h) {
  const int n = h.n();
  int best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size >= best) continue;
    bool ok = true;
    for (const auto& e : h.edges())
      if ((mask_of(e) >> 1 & s) == 0) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

/// The down-set of `tops` on [n].
inline Hypergraph down_set(int n, int k, const std::vector<Edge>& tops) {
  std::vector<Edge> edges;
  for (const auto& e : all_ksets(n, k))
    if (std::any_of(tops.begin(), tops.end(), [&](const Edge& t) { return dominated(e, t); })) edges.push_back(e);
  return Hypergraph(n, k, edges);
}

/// G on [n'] shifted by t, plus every 4-set meeting [t].
inline Hypergraph with_full_prefix(const Hypergraph& g, int t) {
  const int total = g.n() + t;
  std::vector<Edge> edges;
  for (const auto& e : all_ksets(total, 4))
    if (e.front() <= t) edges.push_back(e);
  for (auto e : g.edges()) {
    for (auto& v : e) v += t;
    edges.push_back(e);
  }
  return Hypergraph(total, 4, edges);
}

struct ExtensionInstance {
  Hypergraph h;
  emc::FractionalMatching fm;
};

/// A stable 4-graph with full-degree prefix [t] and a fractional matching of
/// H - [t] of size s* = (t + n')/4 - t whose boundary has `ell` vertices
/// carrying total load p (ell = 0 gives an integral matching). Vertices after
/// [t]: s*-1 disjoint edges, then 4-p full vertices shared by all p-subsets of
/// the boundary, each with weight 1/C(ell,p). Extra random tops enlarge G.
inline ExtensionInstance boundary_instance(std::mt19937_64& rng, int t, int n_rest, int ell, int p, int extra_tops) {
  using emc::Rational;
  const int s_star = (t + n_rest) / 4 - t;
  std::map<Edge, Rational> weights;
  std::vector<Edge> tops;
  for (int i = 0; i + 1 < s_star; ++i) tops.push_back({4 * i + 1, 4 * i + 2, 4 * i + 3, 4 * i + 4});
  const int base = 4 * (s_star - 1);
  if (ell == 0) {
    tops.push_back({base + 1, base + 2, base + 3, base + 4});
    for (const auto& e : tops) weights[e] = 1;
  } else {
    for (const auto& e : tops) weights[e] = 1;
    Edge full;
    for (int j = 1; j <= 4 - p; ++j) full.push_back(base + j);
    std::vector<int> a;
    for (int j = 1; j <= ell; ++j) a.push_back(base + 4 - p + j);
    const Rational w(1, emc::binomial(ell, p).get_si());
    emc::for_each_subset(a, p, [&](std::span<const int> part) {
      Edge e = full;
      e.insert(e.end(), part.begin(), part.end());
      tops.push_back(e);
      weights[e] = w;
      return true;
    });
  }
  const auto all = all_ksets(n_rest, 4);
  for (int i = 0; i < extra_tops; ++i) tops.push_back(all[emc::uniform_below(rng, all.size())]);
  const Hypergraph g = down_set(n_rest, 4, tops);
  std::map<Edge, Rational> shifted;
  for (const auto& [e, w] : weights) {
    Edge moved = e;
    for (auto& v : moved) v += t;
    shifted[moved] = w;
  }
  Hypergraph h = with_full_prefix(g, t);
  auto fm = emc::make_fractional_matching(h, shifted);
  return {std::move(h), std::move(fm)};
}

}  // namespace test
