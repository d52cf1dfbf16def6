#include "emc/hypergraph.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace emc;

TEST_CASE("edges are sorted, deduplicated and validated") {
  Hypergraph h(5, 3, {{3, 1, 2}, {1, 2, 3}, {2, 4, 5}});
  REQUIRE(h.size() == 2);
  CHECK(h.edges()[0] == Edge{1, 2, 3});
  CHECK(h.edges()[1] == Edge{2, 4, 5});
  CHECK(h.contains(Edge{2, 4, 5}));
  CHECK_FALSE(h.contains(Edge{1, 2, 4}));
  CHECK(h.degree(2) == 2);
  CHECK(h.degree(5) == 1);

  CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(2, 3, {}), std::invalid_argument);
}

TEST_CASE("khg round trip") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const Hypergraph h = test::random_hypergraph(rng, 7, 3, 1, 3);
    CHECK(parse_khg(to_khg(h)) == h);
  }
  CHECK_THROWS_AS(parse_khg("garbage"), std::invalid_argument);
}

TEST_CASE("is_stable agrees with the full dominance definition") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 4), k = 2 + static_cast<int>(rng() % 2);
    const Hypergraph h = rep % 2 ? test::random_stable(rng, n, k, 2) : test::random_hypergraph(rng, n, k, 1, 2);
    bool closed = true;
    for (const auto& e : h.edges())
      for (const auto& f : test::all_ksets(n, k))
        if (test::dominated(f, e) && !h.contains(f)) closed = false;
    CHECK(is_stable(h) == closed);
  }
}

TEST_CASE("shadow of a small family") {
  Hypergraph h(4, 3, {{1, 2, 3}, {1, 2, 4}});
  const Hypergraph sh = shadow(h);
  CHECK(sh.k() == 2);
  CHECK(sh.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

TEST_CASE("trace family keeps labels and shrinks the ground set") {
  Hypergraph h(5, 3, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}});
  const std::vector<Vertex> s = {1, 2}, a = {1};
  const Hypergraph f = trace_family(h, a, s);
  CHECK(f.k() == 2);
  CHECK(f.vertices() == std::vector<Vertex>{3, 4, 5});
  CHECK(f.edges() == std::vector<Edge>{{4, 5}});
  const std::vector<Vertex> none;
  CHECK(trace_family(h, none, s).edges() == std::vector<Edge>{{3, 4, 5}});
}

TEST_CASE("induced subgraph") {
  Hypergraph h = complete_hypergraph(6, 3);
  const std::vector<Vertex> w = {2, 4, 5, 6};
  const Hypergraph sub = induced(h, w);
  CHECK(sub.size() == 4);
  CHECK(sub.vertices() == w);
}

TEST_CASE("closeness is asymmetric") {
  const Hypergraph h(4, 2, {{1, 2}, {1, 3}, {2, 3}});
  const Hypergraph g(4, 2, {{1, 2}, {3, 4}});
  const auto r = closeness(g, h, make_rational(1, 8));
  CHECK(r.missing_count == 2);
  CHECK(r.normalizer == 16);
  CHECK(r.ratio == make_rational(1, 8));
  CHECK_FALSE(r.is_close);
  CHECK(closeness(h, g, make_rational(1, 8)).missing_count == 1);
  CHECK(closeness(h, g, make_rational(1, 8)).is_close);
}

TEST_CASE("minimum d-degree against direct counting") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    const Hypergraph h = test::random_hypergraph(rng, 7, 3, 1, 2);
    for (int d = 1; d <= 2; ++d) {
      const MinDegree md = min_d_degree(h, d);
      Integer best = -1;
      std::vector<Vertex> arg;
      for (const auto& a : test::all_ksets(7, d)) {
        long c = 0;
        for (const auto& e : h.edges())
          if (std::includes(e.begin(), e.end(), a.begin(), a.end())) ++c;
        if (best < 0 || c < best) {
          best = c;
          arg = a;
        }
      }
      CHECK(md.value == best);
      CHECK(md.witness == arg);
    }
  }
}
