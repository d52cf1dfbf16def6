#include "emc/sampling.hpp"

#include "emc/constructions.hpp"
#include "emc/fractional.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace emc;

TEST_CASE("samples are deterministic and trimmed") {
  const SampleBatch a = sample_batch(2000, 4, 100, 50, 30, 7);
  const SampleBatch b = sample_batch(2000, 4, 100, 50, 30, 7);
  const SampleBatch c = sample_batch(2000, 4, 100, 50, 30, 8);
  CHECK(a.copies == b.copies);
  CHECK(a.copies != c.copies);
  CHECK(a.ground.size() == 2100);
  CHECK(a.probability == doctest::Approx(std::pow(2000.0, -0.9)));
  CHECK(a.p_exponent == make_rational(-9, 10));
  REQUIRE(a.copies.size() == 30);
  for (std::size_t i = 0; i < a.copies.size(); ++i) {
    const auto& r = a.copies[i];
    CHECK(r.size() % 4 == 0);
    CHECK(r.size() <= a.raw_sizes[i]);
    CHECK(a.raw_sizes[i] - r.size() < 4);
    CHECK(std::is_sorted(r.begin(), r.end()));
    const auto& part = a.partitions[i];
    CHECK(part.t.size() + part.w.size() == r.size());
    for (Vertex v : part.t) CHECK(v <= 100);
    for (Vertex v : part.v) CHECK((v > 100 && v <= 150));
    for (Vertex v : part.w) CHECK(v > 100);
  }
  // Copy i only depends on (seed, i).
  const SampleBatch prefix = sample_batch(2000, 4, 100, 50, 10, 7);
  for (std::size_t i = 0; i < 10; ++i) CHECK(prefix.copies[i] == a.copies[i]);
}

TEST_CASE("incidence counts") {
  const SampleBatch a = sample_batch(500, 3, 0, 0, 40, 3);
  const auto stats = incidence_stats(a, {{}, {1}, {2, 1}});
  CHECK(stats.at({}) == 40);
  int ones = 0;
  for (const auto& r : a.copies)
    if (std::binary_search(r.begin(), r.end(), 1)) ++ones;
  CHECK(stats.at({1}) == ones);
  CHECK(stats.count({1, 2}) == 1);
  CHECK_THROWS_AS(incidence_stats(a, {{1, 2, 3, 4}}), std::invalid_argument);
}

TEST_CASE("mean sample size is near (n + t) p") {
  const SampleBatch a = sample_batch(100000, 4, 0, 0, 100, 1);
  const IncidenceSummary s = summarize_incidence(a);
  CHECK(s.expected_raw_size == doctest::Approx(100000 * std::pow(100000.0, -0.9)));
  CHECK(std::abs(s.mean_raw_size - s.expected_raw_size) <= 0.1 * s.expected_raw_size);
  CHECK(s.min_singleton >= 0);
  CHECK(s.max_singleton <= 100);
}

TEST_CASE("rounding with explicit perfect fractional matchings") {
  const Hypergraph h = complete_hypergraph(40, 2);
  const SampleBatch batch = sample_batch(h, 0, 6, 21);
  std::vector<FractionalMatching> pfms;
  for (const auto& r : batch.copies) {
    std::map<Edge, Rational> w;
    for (std::size_t i = 0; i + 1 < r.size(); i += 2) w[{r[i], r[i + 1]}] = 1;
    pfms.push_back(make_fractional_matching(h, w));
  }
  const RoundingReport rep = round_to_sparse(h, batch, pfms, 5);
  // Weight-1 edges in a single copy are always kept.
  CHECK(rep.kept <= rep.candidates);
  for (const auto& e : rep.sparse.edges()) CHECK(h.contains(e));
  std::size_t total = 0;
  for (const auto& [deg, count] : rep.degree_histogram) total += count;
  CHECK(total == batch.ground.size());
  CHECK(round_to_sparse(h, batch, pfms, 5).sparse == rep.sparse);

  auto bad = pfms;
  if (!batch.copies.empty() && !batch.copies[0].empty()) {
    bad[0] = make_fractional_matching(h, {});
    CHECK_THROWS_AS(round_to_sparse(h, batch, bad, 5), std::invalid_argument);
  }
  CHECK_THROWS_AS(round_to_sparse(h, batch, {}, 5), std::invalid_argument);
}

TEST_CASE("implicit complete rounding conserves weight on average") {
  const SampleBatch batch = sample_batch(3000, 4, 0, 0, 200, 11);
  const RoundingReport rep = round_complete(batch, 5);
  CHECK(rep.kept <= rep.candidates);
  CHECK(round_complete(batch, 5).sparse == rep.sparse);
  // Each copy carries total weight |R|/k; kept edges should be of that order.
  double expected = 0;
  for (const auto& r : batch.copies) expected += static_cast<double>(r.size()) / 4;
  CHECK(static_cast<double>(rep.kept) <= 2 * expected + 50);
  CHECK(static_cast<double>(rep.kept) >= 0.5 * expected - 50);
  CHECK(rep.degree_target == doctest::Approx(std::pow(3000.0, 0.2)));
}

TEST_CASE("greedy matching") {
  const GreedyMatching g = greedy_near_perfect_matching(complete_hypergraph(9, 3));
  CHECK(g.matching.size == 3);
  CHECK(g.uncovered == 0);
  CHECK(g.matching.edges.front() == Edge{1, 2, 3});
  const GreedyMatching path = greedy_near_perfect_matching(Hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(path.matching.size == 2);
  const GreedyMatching star = greedy_near_perfect_matching(Hypergraph(4, 2, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(star.matching.size == 1);
  CHECK(star.uncovered == 2);
}

TEST_CASE("frozen regression") {
  const SampleBatch a = sample_batch(3000, 4, 800, 100, 8, 123);
  std::vector<std::size_t> raw(a.raw_sizes.begin(), a.raw_sizes.end());
  std::vector<Vertex> flat;
  for (const auto& r : a.copies) flat.insert(flat.end(), r.begin(), r.end());
  CHECK(raw == std::vector<std::size_t>{2, 3, 5, 0, 3, 4, 3, 4});
  CHECK(flat == std::vector<Vertex>{1358, 1892, 2625, 3562, 202, 1531, 1950, 2154, 902, 1328, 1838, 2147});
}
