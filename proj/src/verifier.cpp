#include "emc/verifier.hpp"

#include "emc/combinatorics.hpp"
#include "emc/matching.hpp"
#include "emc/random.hpp"
#include "emc/shifting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace emc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<Edge> dominance_order(int n, int k) {
  std::vector<Edge> all;
  auto ground = iota_vertices(1, n);
  for_each_subset(ground, k, [&](std::span<const int> e) {
    all.emplace_back(e.begin(), e.end());
    return true;
  });
  std::stable_sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return all;
}

namespace {

constexpr int kWords = 8;
constexpr int kMaxUniverse = 64 * kWords;

struct Bits {
  std::array<std::uint64_t, kWords> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (int i = 0; i < kWords; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits without(const Bits& o) const {
    Bits r;
    for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  bool intersects(const Bits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
};

class DownSetSearch {
 public:
  DownSetSearch(int n, int k, int s, std::uint64_t budget) : n_(n), k_(k), s_(s), budget_(budget) {
    elements_ = dominance_order(n, k);
    const int size = static_cast<int>(elements_.size());
    if (size > kMaxUniverse) throw std::invalid_argument("universe C(n,k) exceeds 512 sets");
    masks_.resize(size);
    for (int i = 0; i < size; ++i)
      for (Vertex v : elements_[i]) masks_[i] |= std::uint64_t{1} << (v - 1);
    up_.resize(size);
    disjoint_.resize(size);
    vertex_.resize(n);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        if (dominated(elements_[i], elements_[j])) up_[i].set(j);
        if (!(masks_[i] & masks_[j])) disjoint_[i].set(j);
      }
      for (Vertex v : elements_[i]) vertex_[v - 1].set(i);
    }
    build_groups();
  }

  void seed(const Hypergraph& h) {
    if (static_cast<int>(h.size()) <= best_) return;
    best_ = static_cast<int>(h.size());
    best_set_ = Bits{};
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
      if (h.contains(elements_[i])) best_set_.set(i);
  }

  MaxEdgesResult run() {
    Bits undecided;
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i) undecided.set(i);
    aborted_ = false;
    dfs(Bits{}, undecided);
    MaxEdgesResult r;
    r.max_edges = best_;
    r.exhausted = !aborted_;
    r.nodes = nodes_;
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
      if (best_set_.test(i)) edges.push_back(elements_[i]);
    r.witness = Hypergraph(n_, k_, std::move(edges));
    return r;
  }

 private:
  static bool dominated(const Edge& a, const Edge& b) {
    for (std::size_t r = 0; r < a.size(); ++r)
      if (a[r] > b[r]) return false;
    return true;
  }

  // Greedy partition into groups of pairwise disjoint sets; a family with
  // nu <= s keeps at most s members of each group.
  void build_groups() {
    std::vector<std::uint64_t> used;
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i) {
      bool placed = false;
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        if (used[g] & masks_[i]) continue;
        used[g] |= masks_[i];
        groups_[g].set(i);
        placed = true;
        break;
      }
      if (!placed) {
        groups_.emplace_back();
        groups_.back().set(i);
        used.push_back(masks_[i]);
      }
    }
  }

  int group_bound(const Bits& alive) const {
    int total = 0;
    for (const auto& g : groups_) total += std::min(s_, (g & alive).count());
    return total;
  }

  bool has_matching(const Bits& family, int r) const {
    if (r <= 0) return true;
    if (!family.any()) return false;
    std::uint64_t covered = 0;
    int first_vertex = -1;
    for (int v = 0; v < n_; ++v)
      if (family.intersects(vertex_[v])) {
        covered |= std::uint64_t{1} << v;
        if (first_vertex < 0) first_vertex = v;
      }
    if (std::popcount(covered) < r * k_) return false;
    Bits through = family & vertex_[first_vertex];
    for (int c = through.first(); c >= 0; c = through.first()) {
      through.reset(c);
      if (has_matching(family & disjoint_[c], r - 1)) return true;
    }
    return has_matching(family.without(vertex_[first_vertex]), r);
  }

  void dfs(Bits included, Bits undecided) {
    while (true) {
      if (aborted_) return;
      if (++nodes_ > budget_) {
        aborted_ = true;
        return;
      }
      const int size = included.count();
      if (size > best_) {
        best_ = size;
        best_set_ = included;
      }
      if (!undecided.any()) return;
      if (group_bound(included | undecided) <= best_) return;

      // The first undecided set in the linear extension is minimal among the
      // undecided ones; everything it dominates is already included.
      const int e = undecided.first();
      if (has_matching(included & disjoint_[e], s_)) {
        // Infeasible now means infeasible forever: drop its up-set.
        undecided = undecided.without(up_[e]);
        continue;
      }
      Bits with = included;
      with.set(e);
      Bits rest = undecided;
      rest.reset(e);
      dfs(with, rest);
      undecided = undecided.without(up_[e]);
    }
  }

  int n_, k_, s_;
  std::uint64_t budget_;
  std::vector<Edge> elements_;
  std::vector<std::uint64_t> masks_;
  std::vector<Bits> up_, disjoint_, vertex_;
  std::vector<Bits> groups_;
  int best_ = 0;
  Bits best_set_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

MaxEdgesResult max_edges_given_nu(int n, int k, int s, std::uint64_t budget, bool seed_constructions) {
  if (k < 1 || n < k || s < 0) throw std::invalid_argument("max_edges_given_nu requires 1 <= k <= n and s >= 0");
  if (n > 64) throw std::invalid_argument("max_edges_given_nu supports n <= 64");
  DownSetSearch search(n, k, s, budget);
  if (seed_constructions && n >= k * (s + 1)) {
    for (int i : {1, k}) {
      Hypergraph h = build_Hi(n, k, s, i);
      if (matching_number(h).nu <= s) search.seed(h);
    }
  }
  return search.run();
}

EmcReport verify_emc(int n, int k, int s, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  EmcReport r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.formula = emc_bound(n, k, s);
  MaxEdgesResult m = max_edges_given_nu(n, k, s, budget);
  r.oracle = m.max_edges;
  r.exhausted = m.exhausted;
  r.nodes = m.nodes;
  r.witness = std::move(m.witness);
  r.match = r.exhausted && Integer(r.oracle) == r.formula.emc_bound;
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Hypergraph saturate(const Hypergraph& g, const FractionalCover& cover) {
  std::vector<Edge> edges = g.edges();
  for_each_subset(g.vertices(), g.k(), [&](std::span<const int> e) {
    Rational sum = 0;
    for (int v : e) sum += cover.weights.at(v);
    if (sum >= 1) edges.emplace_back(e.begin(), e.end());
    return true;
  });
  return Hypergraph(g.n(), g.k(), std::move(edges));
}

ExtremalProfile extremal_profile(const Hypergraph& g, int s, const Rational& epsilon) {
  if (g.k() != 4) throw std::invalid_argument("extremal_profile requires a 4-graph");
  if (!g.full_ground_set()) throw std::invalid_argument("extremal_profile requires vertex set [n]");
  if (s < 1 || s + 1 > g.n()) throw std::invalid_argument("extremal_profile requires 1 <= s < n");
  if (!is_stable(g)) throw std::invalid_argument("extremal_profile requires a stable graph");
  const int n = g.n();
  auto fm = fractional_matching_number(g);
  if (fm.nu_star > s)
    throw ProfileError("nu*(G) = " + to_string(fm.nu_star) + " exceeds s = " + std::to_string(s), fm.nu_star);

  ExtremalProfile p;
  p.n = n;
  p.s = s;
  p.m = n - s - 1;
  p.nu_star = fm.nu_star;
  p.cover = lex_max_fractional_cover(g, fm.nu_star);
  p.edges = static_cast<unsigned long>(g.size());
  const auto& w = p.cover.weights;

  Rational top = 0;
  for (Vertex i = 1; i <= s; ++i) top += w.at(i);
  p.a = top / s;
  p.b = w.at(s + 1);
  p.mu = (1 - p.a) / (1 - p.b);
  const Rational& delta = stability_delta();
  p.beta = 1 - delta + 3 * p.a - (4 - delta) * p.b;

  p.cover_sorted = true;
  for (Vertex i = 2; i <= n; ++i)
    if (w.at(i) > w.at(i - 1)) p.cover_sorted = false;
  std::vector<Rational> sorted;
  for (Vertex i = 1; i <= n; ++i) sorted.push_back(w.at(i));
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::map<Vertex, Rational> sorted_map;
  for (Vertex i = 1; i <= n; ++i) sorted_map[i] = sorted[i - 1];
  p.sorted_cover_feasible = is_feasible(g, make_fractional_cover(g, sorted_map));

  p.support_ok = true;
  for (const auto& [v, weight] : w)
    if (weight > 0 && Rational(v) > 4 * fm.nu_star) p.support_ok = false;

  auto apex = iota_vertices(1, s + 1);
  p.link_sizes[{}] = static_cast<unsigned long>(trace_family(g, {}, apex).size());
  Integer lhs = p.link_sizes[{}];
  for (Vertex i = 1; i <= s + 1; ++i) {
    std::vector<Vertex> a{i};
    Integer size = static_cast<unsigned long>(trace_family(g, a, apex).size());
    p.link_sizes[a] = size;
    lhs += size;
  }
  p.lhs_lowerbound = lhs;
  p.rhs_lowerbound = Rational(s * binomial(p.m, 3)) - epsilon * power(Rational(n), 4);
  p.lowerbound_holds = Rational(lhs) >= p.rhs_lowerbound;
  return p;
}

ProfilePair extremal_profiles(const Hypergraph& g, int s, const Rational& epsilon) {
  ProfilePair pair;
  pair.raw = extremal_profile(g, s, epsilon);
  pair.saturated = extremal_profile(saturate(g, pair.raw.cover), s, epsilon);
  return pair;
}

Integer link_cap_excess(const Hypergraph& g, int s) {
  auto apex = iota_vertices(1, s + 1);
  Integer worst;
  bool have = false;
  for (int size = 2; size <= std::min(4, s + 1); ++size) {
    for_each_subset(apex, size, [&](std::span<const int> a) {
      Integer excess = Integer(static_cast<unsigned long>(trace_family(g, a, apex).size())) -
                       binomial(g.n() - s - 1, 4 - size);
      if (!have || excess > worst) worst = excess;
      have = true;
      return true;
    });
  }
  return have ? worst : Integer(0);
}

ScanReport stability_scan(int n, int s, const Rational& epsilon, const ScanCorpus& corpus, std::uint64_t seed) {
  auto quarter = exact_root(epsilon, 4);
  if (!quarter) throw std::invalid_argument("epsilon must be the fourth power of a rational");
  ScanReport report;
  report.n = n;
  report.s = s;
  report.epsilon = epsilon;
  report.epsilon_quarter = *quarter;
  report.seed = seed;

  const Hypergraph h1 = build_Hi(n, 4, s, 1);
  const Rational n4 = power(Rational(n), 4);
  const Rational slack = epsilon * n4;
  const Rational threshold = Rational(binomial(n, 4) - binomial(n - s, 4)) - slack;
  const Rational close_at = 400 * *quarter;

  auto evaluate = [&](const std::string& origin, const Hypergraph& g) {
    ScanRow row;
    row.origin = origin;
    row.edges = static_cast<unsigned long>(g.size());
    row.nu = matching_number(g).nu;
    row.nu_ok = row.nu <= s;
    row.near_extremal = Rational(row.edges) >= threshold;
    auto c = closeness(g, h1, close_at);
    row.missing = c.missing_count;
    row.ratio = c.ratio;
    row.close = c.is_close;
    report.rows.push_back(std::move(row));
  };

  evaluate("H1", h1);
  // Deletion budget: half of eps n^4, floored.
  Integer budget_edges;
  {
    Rational half = slack / 2;
    mpz_fdiv_q(budget_edges.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  }
  const long max_delete = std::min<long>(budget_edges.get_si(), static_cast<long>(h1.size()));

  std::mt19937_64 rng(splitmix64(seed));
  auto draw_deletions = [&](long count) {
    std::vector<Edge> edges = h1.edges();
    portable_shuffle(edges, rng);
    edges.resize(edges.size() - static_cast<std::size_t>(count));
    return edges;
  };
  for (int i = 0; i < corpus.perturbed; ++i) {
    long count = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(max_delete) + 1));
    auto edges = draw_deletions(count);
    Hypergraph g = stabilize(Hypergraph(n, 4, std::move(edges))).stable;
    evaluate("perturbed-" + std::to_string(i), g);
  }
  std::vector<Edge> outside;
  for_each_subset(iota_vertices(s + 1, n), 4, [&](std::span<const int> e) {
    outside.emplace_back(e.begin(), e.end());
    return true;
  });
  for (int i = 0; i < corpus.mixed; ++i) {
    long count = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(max_delete) + 1));
    auto edges = draw_deletions(count);
    int extra = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::max(0, corpus.max_extra_edges)) + 1));
    for (int j = 0; j < extra && !outside.empty(); ++j) edges.push_back(outside[uniform_below(rng, outside.size())]);
    Hypergraph g = stabilize(Hypergraph(n, 4, std::move(edges))).stable;
    evaluate("mixed-" + std::to_string(i), g);
  }
  return report;
}

}  // namespace emc
