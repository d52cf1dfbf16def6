#include "emc/fractional.hpp"
#include "emc/matching.hpp"
#include "emc/simplex.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace emc;

namespace {

const Hypergraph fano(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});

}  // namespace

TEST_CASE("simplex on a textbook program") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18: optimum 36 at (2, 6).
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {3, 5};
  lp.constraints = {{{{0, 1}}, Sense::le, 4}, {{{1, 2}}, Sense::le, 12}, {{{0, 3}, {1, 2}}, Sense::le, 18}};
  for (const auto& sol : {solve(lp), solve_primal(lp)}) {
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == 36);
    CHECK(sol.x[0] == 2);
    CHECK(sol.x[1] == 6);
    Rational dual_value = 0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) dual_value += sol.duals[i] * lp.constraints[i].rhs;
    CHECK(dual_value == 36);
  }
  lp.constraints.push_back({{{0, 1}}, Sense::ge, 5});
  CHECK(solve(lp).status == LpStatus::infeasible);
  LinearProgram unb;
  unb.num_vars = 1;
  unb.objective = {1};
  unb.constraints = {{{{0, 1}}, Sense::ge, 1}};
  CHECK(solve(unb).status == LpStatus::unbounded);
}

TEST_CASE("fractional numbers of small fixed graphs") {
  CHECK(fractional_matching_number(fano).nu_star == make_rational(7, 3));
  CHECK(fractional_cover_number(fano).tau_star == make_rational(7, 3));
  const Hypergraph triangle(3, 2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(fractional_matching_number(triangle).nu_star == make_rational(3, 2));
  CHECK(has_perfect_fm(triangle));
  CHECK(has_perfect_fm(complete_hypergraph(8, 4)));
  CHECK_FALSE(has_perfect_fm(Hypergraph(5, 2, {{1, 2}})));
  const Hypergraph empty(4, 2, {});
  CHECK(fractional_matching_number(empty).nu_star == 0);
  CHECK(fractional_cover_number(empty).tau_star == 0);
}

TEST_CASE("duality, sandwich and slackness on random instances") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 200; ++rep) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + 1 + static_cast<int>(rng() % (12 - k));
    const Hypergraph h = test::random_hypergraph(rng, n, k, 1 + rng() % 4, 8);
    const auto m = fractional_matching_number(h);
    const auto c = fractional_cover_number(h);
    // A feasible primal-dual pair of equal value certifies both optima.
    CHECK(is_feasible(h, m.fm));
    CHECK(is_feasible(h, c.fc));
    CHECK(m.nu_star == c.tau_star);
    CHECK(m.fm.size == m.nu_star);
    CHECK(c.fc.size == c.tau_star);
    if (n <= 10) {
      CHECK(Rational(test::brute_nu(h)) <= m.nu_star);
      CHECK(m.nu_star <= Rational(test::brute_tau(h)));
    }
    const auto slack = check_complementary_slackness(m.fm, c.fc);
    CHECK(slack.sizes_equal);
    CHECK(slack.saturated_ok);
    CHECK(slack.support_ok);
    CHECK(Rational(slack.support_size) <= k * m.nu_star);
  }
}

TEST_CASE("lex-max cover is feasible, optimal and not beaten by any vertex-transposed cover") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 30; ++rep) {
    const Hypergraph h = test::random_stable(rng, 8, 3, 2);
    const auto c = fractional_cover_number(h);
    const FractionalCover lex = lex_max_fractional_cover(h, c.tau_star);
    CHECK(is_feasible(h, lex));
    CHECK(lex.size == c.tau_star);
    // On a stable graph a sorted cover stays feasible, so lex-max weights are nonincreasing.
    for (Vertex v = 2; v <= 8; ++v) CHECK(lex.weights.at(v) <= lex.weights.at(v - 1));
  }
}

TEST_CASE("lex-max fractional matching") {
  const Hypergraph k4 = complete_hypergraph(4, 2);
  const auto fm = lex_max_fractional_matching(k4, {1, 2, 3, 4}, 1);
  CHECK(fm.size == 1);
  CHECK(fm.loads.at(1) == 1);
  CHECK(fm.loads.at(2) == 1);
  CHECK(fm.loads.at(3) == 0);
  const auto rev = lex_max_fractional_matching(k4, {4, 3, 2, 1}, 1);
  CHECK(rev.loads.at(4) == 1);
  CHECK(rev.loads.at(3) == 1);
  CHECK_THROWS_AS(lex_max_fractional_matching(k4, {1, 2, 3, 4}, 3), TargetTooLarge);
  CHECK_THROWS_AS(lex_max_fractional_matching(k4, {1, 1, 3, 4}, 1), std::invalid_argument);

  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 6 + static_cast<int>(rng() % 7);
    const Hypergraph g = test::random_stable(rng, n, 4, 1 + static_cast<int>(rng() % 3));
    const Rational nu = fractional_matching_number(g).nu_star;
    const auto f = lex_max_fractional_matching(g, iota_vertices(1, n), nu);
    CHECK(f.size == nu);
    CHECK(is_feasible(g, f));
    for (Vertex v = 2; v <= n; ++v) CHECK(f.loads.at(v) <= f.loads.at(v - 1));
    CHECK(boundary_set(f).size() <= 4);
  }
}

TEST_CASE("extension of the trivial perfect matching") {
  const Hypergraph h = complete_hypergraph(8, 4);
  const auto fm = make_fractional_matching(h, {{{1, 2, 3, 4}, 1}, {{5, 6, 7, 8}, 1}});
  const auto ext = extend_to_perfect_fm(h, 0, fm);
  CHECK(ext.fm.weights == fm.weights);
  for (const auto& [v, load] : ext.fm.loads) CHECK(load == 1);
}

TEST_CASE("extension of lex-max matchings on apex constructions") {
  std::mt19937_64 rng(31);
  int successes = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const int t = 1 + static_cast<int>(rng() % 2);
    int np = 6 + static_cast<int>(rng() % 6);
    while ((np + t) % 4) ++np;
    const Hypergraph h = test::with_full_prefix(test::random_stable(rng, np, 4, 1 + static_cast<int>(rng() % 3)), t);
    const int s_star = (np + t) / 4 - t;
    const std::vector<Vertex> rest = iota_vertices(t + 1, np + t);
    FractionalMatching fm;
    try {
      fm = lex_max_fractional_matching(induced(h, rest), rest, s_star);
    } catch (const TargetTooLarge&) {
      continue;
    }
    const auto ext = extend_to_perfect_fm(h, t, fm);
    ++successes;
    CHECK(ext.ell == 0);
    for (const auto& [v, load] : ext.fm.loads) CHECK(load == 1);
  }
  CHECK(successes >= 20);
}

TEST_CASE("extension with a fractional boundary") {
  std::mt19937_64 rng(32);
  for (const auto& [ell, p] : std::vector<std::pair<int, int>>{{0, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}})
    for (int t : {1, 2, 3}) {
      const int np = 3 * t + 8;
      const auto inst = test::boundary_instance(rng, t, np, ell, p, 2);
      CHECK(boundary_set(inst.fm).size() == static_cast<std::size_t>(ell));
      const auto ext = extend_to_perfect_fm(inst.h, t, inst.fm);
      CHECK(ext.ell == ell);
      if (ell) {
        CHECK(ext.p == p);
        CHECK(ext.e0.size() == binomial(ell, ell - p).get_ui());
      }
      for (const auto& [v, load] : ext.fm.loads) CHECK(load == 1);
      for (const auto& [e, w] : ext.fm.weights) {
        CHECK(inst.h.contains(e));
        CHECK(w > 0);
        CHECK(w <= 1);
      }
    }
}

TEST_CASE("extension rejects broken hypotheses") {
  const Hypergraph h = complete_hypergraph(8, 4);
  const auto fm = make_fractional_matching(h, {{{1, 2, 3, 4}, 1}});
  CHECK_THROWS_AS(extend_to_perfect_fm(h, 0, fm), PreconditionError);
  const Hypergraph not_full(8, 4, {{2, 3, 4, 5}});
  CHECK_THROWS_AS(extend_to_perfect_fm(not_full, 1, FractionalMatching{}), PreconditionError);
  CHECK_THROWS_AS(extend_to_perfect_fm(complete_hypergraph(6, 3), 0, FractionalMatching{}), PreconditionError);
}

TEST_CASE("pivot trace is written when requested") {
  std::ostringstream trace;
  fractional_matching_number(fano, &trace);
  CHECK_FALSE(trace.str().empty());
}
