#include "emc/constructions.hpp"
#include "emc/matching.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace emc;

namespace {

Integer choose(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("bound terms and winners") {
  const BoundReport r = emc_bound(9, 3, 2);
  CHECK(r.cover_term == 49);
  CHECK(r.clique_term == 56);
  CHECK(r.emc_bound == 56);
  CHECK(r.winner == Winner::clique);
  CHECK(emc_bound(20, 3, 2).winner == Winner::cover);
  CHECK(emc_bound(5, 2, 1).in_range);
  CHECK_FALSE(emc_bound(5, 2, 2).in_range);
  for (int n = 4; n <= 30; ++n)
    for (int k = 2; k <= 4; ++k)
      for (int s = 1; k * (s + 1) <= n; ++s) {
        const BoundReport b = emc_bound(n, k, s);
        CHECK(b.cover_term == choose(n, k) - choose(n - s, k));
        CHECK(b.clique_term == choose(s * k + k - 1, k));
        CHECK(b.emc_bound == std::max(b.cover_term, b.clique_term));
      }
}

TEST_CASE("H_i families: sizes and matching number") {
  for (int k = 2; k <= 3; ++k)
    for (int n = 2 * k; n <= 10; ++n)
      for (int s = 1; k * (s + 1) <= n; ++s) {
        const BoundReport b = emc_bound(n, k, s);
        CHECK(build_Hi(n, k, s, 1).size() == b.cover_term);
        CHECK(build_Hi(n, k, s, k).size() == b.clique_term);
        for (int i = 1; i <= k; ++i) {
          const Hypergraph h = build_Hi(n, k, s, i);
          CHECK(is_stable(h));
          CHECK(test::brute_nu(h) == s);
          // Membership straight from the definition.
          for (const auto& e : test::all_ksets(n, k)) {
            const int meet = static_cast<int>(std::count_if(e.begin(), e.end(), [&](Vertex v) { return v <= i * (s + 1) - 1; }));
            CHECK(h.contains(e) == (meet >= i));
          }
        }
      }
  CHECK_THROWS_AS(build_Hi(7, 4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_Hi(12, 3, 2, 4), std::invalid_argument);
}

TEST_CASE("H(U,W) and the capped variant") {
  const std::vector<Vertex> u = {1, 2}, w = {3, 4, 5, 6};
  const Hypergraph huw = build_HUW(u, w, 3);
  CHECK(huw.size() == choose(6, 3) - choose(4, 3));
  const Hypergraph capped = build_HpUW(u, w, 3, 1);
  CHECK(capped.size() == 2 * choose(4, 2));
  for (const auto& e : capped.edges())
    CHECK(std::count_if(e.begin(), e.end(), [](Vertex v) { return v <= 2; }) == 1);
  CHECK(build_HpUW(u, w, 3, 3) == huw);
  CHECK_THROWS_AS(build_HUW({1, 2}, {2, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_HpUW(u, w, 3, 0), std::invalid_argument);
}

TEST_CASE("apex constructions") {
  CHECK(construction1_t(100, 10, make_rational(1, 100)) == 19);
  CHECK(construction2_t(40, 3, 5) == 11);
  CHECK(construction2_t(21, 4, 3) == 2);
  const Hypergraph g = build_Hi(8, 4, 1, 1);
  const Construction c = construction2(g, 1);
  CHECK(c.t == construction2_t(8, 4, 1));
  CHECK(c.h.n() == 8 + c.t);
  for (Vertex i = 1; i <= c.t; ++i) CHECK(c.h.degree(i) == choose(c.h.n() - 1, 3).get_ui());
  std::size_t inner = 0;
  for (const auto& e : c.h.edges())
    if (e.front() > c.t) ++inner;
  CHECK(inner == g.size());
  CHECK(is_stable(c.h));
  CHECK_THROWS_AS(construction1(g, 1, 0), std::invalid_argument);
}

TEST_CASE("threshold formulas") {
  CHECK(degree_threshold_formula(15, 5, 1, 2).value == 287);
  CHECK(degree_threshold_formula(20, 5, 1, 3).value == 1497);
  CHECK(degree_threshold_formula(10, 3, 1, 2).value == 9);
  CHECK(degree_threshold_formula(12, 4, 2, 2).value == 10);
  CHECK(degree_threshold_formula(8, 4, 1, 2).value == 16);
  CHECK_FALSE(degree_threshold_formula(8, 4, 1, 2).clamped);
  CHECK(kot_asymptotic(100, 4, 1, 10) == make_rational(42506079, 1000));
  CHECK(hpsko_threshold_coefficient(4, 1) == make_rational(37, 64));
  CHECK(hpsko_threshold_coefficient(3, 2) == make_rational(1, 2));
  CHECK_THROWS_AS(degree_threshold_formula(10, 3, 3, 1), std::invalid_argument);
}

TEST_CASE("tightness witness for the degree threshold") {
  for (int n : {10, 11})
    for (int s : {2, 3}) {
      const int k = 3, d = 1;
      const auto u = iota_vertices(1, s - 1);
      const auto w = iota_vertices(s, n);
      const Hypergraph h = build_HpUW(u, w, k, k - d);
      CHECK(min_d_degree(h, d).value == degree_threshold_formula(n, k, d, s).value - 1);
      CHECK(matching_number(h).nu == s - 1);
    }
}
