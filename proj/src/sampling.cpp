#include "emc/sampling.hpp"

#include "emc/combinatorics.hpp"
#include "emc/random.hpp"
#include "emc/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace emc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::mt19937_64 copy_rng(std::uint64_t seed, std::size_t i) { return std::mt19937_64(splitmix64(seed + i * kGolden)); }

SampleBatch sample_on(std::vector<Vertex> ground, int n_base, int k, int t, int s, int copies, std::uint64_t seed) {
  if (n_base < 1) throw std::invalid_argument("sample_batch needs n >= 1 vertices outside [t]");
  if (t < 0 || s < 0) throw std::invalid_argument("sample_batch needs t, s >= 0");
  if (copies < 0) throw std::invalid_argument("sample_batch needs copies >= 0");
  if (k < 1) throw std::invalid_argument("sample_batch needs k >= 1");
  SampleBatch b;
  b.n_base = n_base;
  b.k = k;
  b.t = t;
  b.s = s;
  b.seed = seed;
  b.probability = std::pow(static_cast<double>(n_base), -0.9);
  b.ground = std::move(ground);
  // Bernoulli(p): the top 53 bits of a draw fall below floor(p 2^53).
  const auto threshold = static_cast<std::uint64_t>(std::floor(std::ldexp(b.probability, 53)));
  for (int i = 0; i < copies; ++i) {
    auto rng = copy_rng(seed, i);
    std::vector<Vertex> r;
    for (Vertex v : b.ground)
      if ((rng() >> 11) < threshold) r.push_back(v);
    b.raw_sizes.push_back(r.size());
    while (r.size() % k != 0) r.pop_back();
    CopyPartition part;
    for (Vertex v : r) {
      if (v <= t) part.t.push_back(v);
      else part.w.push_back(v);
      if (v > t && v <= t + s) part.v.push_back(v);
    }
    b.copies.push_back(std::move(r));
    b.partitions.push_back(std::move(part));
  }
  return b;
}

bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& sorted_set) {
  return std::includes(sorted_set.begin(), sorted_set.end(), a.begin(), a.end());
}

int copies_containing(const SampleBatch& batch, const std::vector<Vertex>& a) {
  int y = 0;
  for (const auto& r : batch.copies)
    if (subset_of(a, r)) ++y;
  return y;
}

// Uniform integer in [0, bound) from 64-bit words, by rejection.
Integer uniform_integer_below(std::mt19937_64& rng, const Integer& bound) {
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  while (true) {
    Integer r = 0;
    for (std::size_t w = 0; w < words; ++w) {
      r <<= 64;
      const std::uint64_t x = rng();
      r += Integer(static_cast<unsigned long>(x >> 32)) * Integer(4294967296UL) +
           Integer(static_cast<unsigned long>(x & 0xffffffffULL));
    }
    mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
    if (r < bound) return r;
  }
}

bool exact_bernoulli(std::mt19937_64& rng, const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return uniform_integer_below(rng, p.get_den()) < p.get_num();
}

RoundingReport finish_rounding(const SampleBatch& batch, int k, std::vector<Edge> kept_edges, std::size_t candidates) {
  RoundingReport rep;
  rep.candidates = candidates;
  rep.kept = kept_edges.size();
  const int n = batch.ground.empty() ? k : std::max(k, batch.ground.back());
  rep.sparse = Hypergraph::with_ground_set(n, k, batch.ground, std::move(kept_edges));
  std::map<Vertex, std::size_t> degree;
  std::map<std::pair<Vertex, Vertex>, std::size_t> codegree;
  for (const Edge& e : rep.sparse.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      ++degree[e[i]];
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const std::size_t c = ++codegree[{e[i], e[j]}];
        rep.max_codegree = std::max(rep.max_codegree, c);
      }
    }
  }
  for (Vertex v : batch.ground) {
    auto it = degree.find(v);
    ++rep.degree_histogram[it == degree.end() ? 0 : it->second];
  }
  rep.degree_target = std::pow(static_cast<double>(batch.n_base), 0.2);
  rep.codegree_target = std::pow(static_cast<double>(batch.n_base), 0.1);
  return rep;
}

}  // namespace

SampleBatch sample_batch(const Hypergraph& h, int t, int copies, std::uint64_t seed, int s) {
  const int total = static_cast<int>(h.vertices().size());
  if (t > total) throw std::invalid_argument("sample_batch needs t <= |V(H)|");
  return sample_on(h.vertices(), total - t, h.k(), t, s, copies, seed);
}

SampleBatch sample_batch(int n, int k, int t, int s, int copies, std::uint64_t seed) {
  if (n < 1 || t < 0) throw std::invalid_argument("sample_batch needs n >= 1 and t >= 0");
  return sample_on(iota_vertices(1, n + t), n, k, t, s, copies, seed);
}

std::map<std::vector<Vertex>, int> incidence_stats(const SampleBatch& batch,
                                                   const std::vector<std::vector<Vertex>>& probes) {
  std::map<std::vector<Vertex>, int> out;
  for (auto probe : probes) {
    if (static_cast<int>(probe.size()) > batch.k) throw std::invalid_argument("incidence probes must have size <= k");
    std::sort(probe.begin(), probe.end());
    probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
    out[probe] = copies_containing(batch, probe);
  }
  return out;
}

IncidenceSummary summarize_incidence(const SampleBatch& batch, const Hypergraph* h) {
  IncidenceSummary out;
  const double copies = static_cast<double>(batch.copies.size());
  out.expected_singleton = copies * batch.probability;
  out.expected_raw_size = static_cast<double>(batch.ground.size()) * batch.probability;
  std::map<Vertex, int> single;
  std::map<std::pair<Vertex, Vertex>, int> pairs;
  std::map<Edge, int> edges;
  for (const auto& r : batch.copies) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      ++single[r[i]];
      for (std::size_t j = i + 1; j < r.size(); ++j) ++pairs[{r[i], r[j]}];
    }
    if (h && static_cast<int>(r.size()) >= h->k()) {
      for_each_subset(std::span<const int>(r), h->k(), [&](std::span<const int> e) {
        if (h->contains(e)) ++edges[Edge(e.begin(), e.end())];
        return true;
      });
    }
  }
  if (!batch.ground.empty()) {
    long total = 0;
    out.min_singleton = INT32_MAX;
    for (Vertex v : batch.ground) {
      auto it = single.find(v);
      const int y = it == single.end() ? 0 : it->second;
      total += y;
      out.min_singleton = std::min(out.min_singleton, y);
      out.max_singleton = std::max(out.max_singleton, y);
    }
    out.mean_singleton = static_cast<double>(total) / static_cast<double>(batch.ground.size());
  }
  for (const auto& [p, y] : pairs)
    if (y >= 3) ++out.pairs_y_ge_3;
  for (const auto& [e, y] : edges)
    if (y >= 2) ++out.edges_y_ge_2;
  if (!batch.raw_sizes.empty()) {
    double sum = 0;
    for (auto r : batch.raw_sizes) sum += static_cast<double>(r);
    out.mean_raw_size = sum / static_cast<double>(batch.raw_sizes.size());
  }
  return out;
}

RoundingReport round_to_sparse(const Hypergraph& h, const SampleBatch& batch,
                               const std::vector<FractionalMatching>& pfms, std::uint64_t seed) {
  if (pfms.size() != batch.copies.size()) throw std::invalid_argument("round_to_sparse needs one matching per copy");
  for (std::size_t i = 0; i < pfms.size(); ++i) {
    const auto& r = batch.copies[i];
    std::map<Vertex, Rational> load;
    for (const auto& [e, w] : pfms[i].weights) {
      if (!subset_of(e, r) || !h.contains(e))
        throw std::invalid_argument("copy " + std::to_string(i) + ": weighted set " + edge_to_string(e) +
                                    " is not an edge of H[R]");
      for (Vertex v : e) load[v] += w;
    }
    for (Vertex v : r)
      if (load[v] != 1)
        throw std::invalid_argument("copy " + std::to_string(i) + ": matching is not perfect at vertex " +
                                    std::to_string(v));
  }
  std::vector<Edge> kept;
  std::size_t candidates = 0;
  for (std::size_t i = 0; i < pfms.size(); ++i) {
    auto rng = copy_rng(seed, i);
    for (const auto& [e, w] : pfms[i].weights) {
      if (w <= 0 || copies_containing(batch, e) != 1) continue;
      ++candidates;
      if (exact_bernoulli(rng, w)) kept.push_back(e);
    }
  }
  return finish_rounding(batch, h.k(), std::move(kept), candidates);
}

RoundingReport round_complete(const SampleBatch& batch, std::uint64_t seed) {
  const int k = batch.k;
  std::map<Edge, int> y;
  for (const auto& r : batch.copies)
    for_each_subset(std::span<const int>(r), k, [&](std::span<const int> e) {
      ++y[Edge(e.begin(), e.end())];
      return true;
    });
  std::vector<Edge> kept;
  std::size_t candidates = 0;
  for (std::size_t i = 0; i < batch.copies.size(); ++i) {
    const auto& r = batch.copies[i];
    if (static_cast<int>(r.size()) < k) continue;
    const Rational w(Integer(1), binomial(static_cast<long>(r.size()) - 1, k - 1));
    auto rng = copy_rng(seed, i);
    for_each_subset(std::span<const int>(r), k, [&](std::span<const int> e) {
      Edge edge(e.begin(), e.end());
      if (y[edge] != 1) return true;
      ++candidates;
      if (exact_bernoulli(rng, w)) kept.push_back(std::move(edge));
      return true;
    });
  }
  return finish_rounding(batch, k, std::move(kept), candidates);
}

GreedyMatching greedy_near_perfect_matching(const Hypergraph& h) {
  GreedyMatching out;
  std::vector<char> used(static_cast<std::size_t>(h.n()) + 1, 0);
  for (const Edge& e : h.edges()) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; })) continue;
    for (Vertex v : e) used[v] = 1;
    out.matching.edges.push_back(e);
  }
  out.matching.size = static_cast<int>(out.matching.edges.size());
  out.uncovered = h.vertices().size() - static_cast<std::size_t>(h.k()) * out.matching.edges.size();
  return out;
}

}  // namespace emc
