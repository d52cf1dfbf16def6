#include "emc/matching.hpp"
#include "emc/shifting.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace emc;

namespace {

// Direct transcription of the exchange rule on a set of edges.
std::set<Edge> oracle_shift(const Hypergraph& h, Vertex i, Vertex j) {
  const std::set<Edge> before(h.edges().begin(), h.edges().end());
  std::set<Edge> after;
  for (const Edge& e : before) {
    const bool has_i = std::count(e.begin(), e.end(), i) > 0;
    const bool has_j = std::count(e.begin(), e.end(), j) > 0;
    if (has_j && !has_i) {
      Edge moved = e;
      std::replace(moved.begin(), moved.end(), j, i);
      std::sort(moved.begin(), moved.end());
      after.insert(before.count(moved) ? e : moved);
    } else {
      after.insert(e);
    }
  }
  return after;
}

}  // namespace

TEST_CASE("single exchanges") {
  CHECK(shift_ij(Hypergraph(4, 2, {{3, 4}}), 1, 3).edges() == std::vector<Edge>{{1, 4}});
  CHECK(shift_ij(Hypergraph(3, 2, {{1, 2}, {2, 3}}), 1, 2).edges() == std::vector<Edge>{{1, 2}, {1, 3}});
  const Hypergraph blocked(3, 2, {{1, 3}, {2, 3}});
  CHECK(shift_ij(blocked, 1, 2) == blocked);
  CHECK_THROWS_AS(shift_ij(blocked, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift_ij(blocked, 3, 1), std::invalid_argument);
}

TEST_CASE("shift_ij matches the exchange oracle") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 200; ++rep) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + 1 + static_cast<int>(rng() % 5);
    const Hypergraph h = test::random_hypergraph(rng, n, k, 1, 3);
    const Vertex i = 1 + static_cast<Vertex>(rng() % (n - 1));
    const Vertex j = i + 1 + static_cast<Vertex>(rng() % (n - i));
    const auto got = shift_ij(h, i, j).edges();
    CHECK(std::set<Edge>(got.begin(), got.end()) == oracle_shift(h, i, j));
    CHECK(got.size() == h.size());
  }
}

TEST_CASE("stabilize keeps size, is stable, does not raise nu and is idempotent") {
  std::mt19937_64 rng(300);
  for (int rep = 0; rep < 300; ++rep) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + 1 + static_cast<int>(rng() % (10 - k));
    const Hypergraph h = test::random_hypergraph(rng, n, k, 1 + rng() % 3, 6);
    const StabilizeResult r = stabilize(h);
    CHECK(r.stable.size() == h.size());
    CHECK(is_stable(r.stable));
    CHECK(test::brute_nu(r.stable) <= test::brute_nu(h));
    CHECK(stabilize(r.stable).stable == r.stable);
    CHECK(stabilize(r.stable).log.empty());
    REQUIRE(r.potential.size() == r.log.size());
    long long prev = label_sum(h);
    for (long long p : r.potential) {
      CHECK(p < prev);
      prev = p;
    }
    CHECK(prev == label_sum(r.stable));
    // Replaying the log reproduces the result.
    Hypergraph replay = h;
    for (const auto& [i, j] : r.log) replay = shift_ij(replay, i, j);
    CHECK(replay == r.stable);
  }
}

TEST_CASE("stable inputs are fixed points") {
  CHECK(stabilize(complete_hypergraph(6, 3)).log.empty());
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 20; ++rep) {
    const Hypergraph g = test::random_stable(rng, 7, 3, 2);
    CHECK(stabilize(g).stable == g);
  }
}
