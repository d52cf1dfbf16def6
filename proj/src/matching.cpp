#include "emc/matching.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace emc {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

Mask to_mask(const Edge& e) {
  Mask m = 0;
  for (Vertex v : e) m |= bit(v);
  return m;
}

Edge to_edge(Mask m) {
  Edge e;
  while (m) {
    e.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return e;
}

void require_small(const Hypergraph& h, const char* what) {
  if (h.n() > 64) throw std::invalid_argument(std::string(what) + " supports n <= 64");
  if (h.k() < 1) throw std::invalid_argument(std::string(what) + " requires k >= 1");
}

// Bound from prefixes of the active vertices: if every edge has at least r
// vertices among the first R_r active ones, disjoint edges number at most
// R_r / r.
int prefix_bound(const std::vector<Mask>& cands, Mask active, int k) {
  int rank[64] = {};
  int r = 0;
  for (Mask m = active; m; m &= m - 1) rank[std::countr_zero(m)] = ++r;
  std::vector<int> reach(k, 0);
  for (Mask e : cands) {
    int i = 0;
    for (Mask m = e; m; m &= m - 1, ++i) reach[i] = std::max(reach[i], rank[std::countr_zero(m)]);
  }
  int best = r / k;
  for (int i = 0; i < k; ++i) best = std::min(best, reach[i] / (i + 1));
  return best;
}

int greedy_cover_size(std::vector<Mask> edges) {
  int size = 0;
  while (!edges.empty()) {
    int degree[64] = {};
    for (Mask e : edges)
      for (Mask m = e; m; m &= m - 1) ++degree[std::countr_zero(m)];
    int v = static_cast<int>(std::max_element(degree, degree + 64) - degree);
    Mask b = Mask{1} << v;
    std::erase_if(edges, [b](Mask e) { return (e & b) != 0; });
    ++size;
  }
  return size;
}

struct MatchSearch {
  int k;
  int best;
  int goal;
  std::vector<Mask> stack;
  std::vector<Mask> best_stack;
  std::uint64_t nodes = 0;
  bool done = false;

  int upper_bound(const std::vector<Mask>& cands) const {
    Mask active = 0;
    for (Mask e : cands) active |= e;
    int ub = prefix_bound(cands, active, k);
    if (static_cast<int>(stack.size()) + ub > best) ub = std::min(ub, greedy_cover_size(cands));
    return ub;
  }

  // cands: edges disjoint from everything used or deleted so far, sorted by
  // descending mask (colex descending).
  void run(const std::vector<Mask>& cands) {
    ++nodes;
    const int depth = static_cast<int>(stack.size());
    if (depth > best) {
      best = depth;
      best_stack = stack;
      if (best >= goal) {
        done = true;
        return;
      }
    }
    if (cands.empty()) return;
    if (depth + upper_bound(cands) <= best) return;

    Mask active = 0;
    for (Mask e : cands) active |= e;
    const Mask v = active & (~active + 1);

    std::vector<Mask> next;
    for (Mask e : cands) {
      if (!(e & v)) continue;
      next.clear();
      for (Mask f : cands)
        if (!(f & e)) next.push_back(f);
      stack.push_back(e);
      run(next);
      stack.pop_back();
      if (done) return;
    }
    next.clear();
    for (Mask f : cands)
      if (!(f & v)) next.push_back(f);
    run(next);
  }
};

std::vector<Mask> sorted_masks(const Hypergraph& h) {
  std::vector<Mask> masks;
  masks.reserve(h.size());
  for (const auto& e : h.edges()) masks.push_back(to_mask(e));
  std::sort(masks.begin(), masks.end(), std::greater<>());
  return masks;
}

MatchingWitness witness_from(const std::vector<Mask>& stack) {
  MatchingWitness w;
  for (Mask m : stack) w.edges.push_back(to_edge(m));
  std::sort(w.edges.begin(), w.edges.end());
  w.size = static_cast<int>(w.edges.size());
  return w;
}

}  // namespace

MatchingResult matching_number(const Hypergraph& h) {
  require_small(h, "matching_number");
  auto masks = sorted_masks(h);
  MatchSearch search{h.k(), 0, 0, {}, {}};
  if (!masks.empty()) {
    Mask active = 0;
    for (Mask e : masks) active |= e;
    search.goal = std::min(prefix_bound(masks, active, h.k()), greedy_cover_size(masks));
    search.run(masks);
  }
  MatchingResult r;
  r.nu = search.best;
  r.witness = witness_from(search.best_stack);
  r.nodes = search.nodes;
  return r;
}

std::optional<MatchingWitness> has_matching_of_size(const Hypergraph& h, int s) {
  if (s < 0) throw std::invalid_argument("matching size must be nonnegative");
  if (s == 0) return MatchingWitness{};
  require_small(h, "has_matching_of_size");
  auto masks = sorted_masks(h);
  MatchSearch search{h.k(), s - 1, s, {}, {}};
  search.run(masks);
  if (!search.done) return std::nullopt;
  return witness_from(search.best_stack);
}

namespace {

struct CoverSearch {
  int best;

  static int disjoint_lower_bound(const std::vector<Mask>& edges) {
    Mask used = 0;
    int count = 0;
    for (Mask e : edges)
      if (!(e & used)) {
        used |= e;
        ++count;
      }
    return count;
  }

  void run(std::vector<Mask> uncovered, Mask forbidden, int chosen) {
    // Unit propagation: an edge with one allowed vertex forces it.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask e : uncovered) {
        Mask allowed = e & ~forbidden;
        if (!allowed) return;
        if (std::has_single_bit(allowed)) {
          ++chosen;
          std::erase_if(uncovered, [allowed](Mask f) { return (f & allowed) != 0; });
          changed = true;
          break;
        }
      }
    }
    if (uncovered.empty()) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + disjoint_lower_bound(uncovered) >= best) return;

    int degree[64] = {};
    for (Mask e : uncovered)
      for (Mask m = e & ~forbidden; m; m &= m - 1) ++degree[std::countr_zero(m)];
    const int v = static_cast<int>(std::max_element(degree, degree + 64) - degree);
    const Mask b = Mask{1} << v;

    std::vector<Mask> rest;
    for (Mask e : uncovered)
      if (!(e & b)) rest.push_back(e);
    run(std::move(rest), forbidden, chosen + 1);
    run(std::move(uncovered), forbidden | b, chosen);
  }
};

}  // namespace

int cover_number(const Hypergraph& h) {
  require_small(h, "cover_number");
  std::vector<Mask> masks;
  for (const auto& e : h.edges()) masks.push_back(to_mask(e));
  if (masks.empty()) return 0;
  CoverSearch search{greedy_cover_size(masks)};
  search.run(masks, 0, 0);
  return search.best;
}

bool is_valid_matching(const Hypergraph& h, const std::vector<Edge>& edges) {
  std::vector<Vertex> seen;
  for (const auto& e : edges) {
    if (!h.contains(e)) return false;
    seen.insert(seen.end(), e.begin(), e.end());
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace emc
