#include "emc/shifting.hpp"

#include <algorithm>
#include <stdexcept>

namespace emc {

Hypergraph shift_ij(const Hypergraph& h, Vertex i, Vertex j) {
  if (i >= j) throw std::invalid_argument("shift requires i < j");
  if (i < 1 || j > h.n()) throw std::invalid_argument("shift indices outside [1,n]");
  std::vector<Edge> out;
  out.reserve(h.size());
  for (const auto& e : h.edges()) {
    const bool has_j = std::binary_search(e.begin(), e.end(), j);
    const bool has_i = std::binary_search(e.begin(), e.end(), i);
    if (!has_j || has_i) {
      out.push_back(e);
      continue;
    }
    Edge moved;
    moved.reserve(e.size());
    for (Vertex v : e)
      if (v != j) moved.push_back(v);
    moved.insert(std::upper_bound(moved.begin(), moved.end(), i), i);
    out.push_back(h.contains(moved) ? e : moved);
  }
  return Hypergraph::with_ground_set(h.n(), h.k(), h.vertices(), std::move(out));
}

long long label_sum(const Hypergraph& h) {
  long long sum = 0;
  for (const auto& e : h.edges())
    for (Vertex v : e) sum += v;
  return sum;
}

StabilizeResult stabilize(const Hypergraph& h) {
  StabilizeResult r;
  r.stable = h;
  const auto& ground = h.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < ground.size(); ++a) {
      for (std::size_t b = a + 1; b < ground.size(); ++b) {
        Hypergraph next = shift_ij(r.stable, ground[a], ground[b]);
        if (next == r.stable) continue;
        r.stable = std::move(next);
        r.log.emplace_back(ground[a], ground[b]);
        r.potential.push_back(label_sum(r.stable));
        changed = true;
      }
    }
  }
  return r;
}

}  // namespace emc
