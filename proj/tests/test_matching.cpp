#include "emc/matching.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace emc;

TEST_CASE("matching number against brute force") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 150; ++rep) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + 2 + static_cast<int>(rng() % 6);
    const Hypergraph h = test::random_hypergraph(rng, n, k, 1 + rng() % 3, 6);
    const MatchingResult m = matching_number(h);
    CHECK(m.nu == test::brute_nu(h));
    CHECK(m.witness.size == m.nu);
    CHECK(is_valid_matching(h, m.witness.edges));
  }
}

TEST_CASE("has_matching_of_size returns witnesses of the requested size") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 60; ++rep) {
    const Hypergraph h = test::random_hypergraph(rng, 9, 3, 1, 4);
    const int nu = test::brute_nu(h);
    for (int s = 0; s <= nu + 1; ++s) {
      const auto w = has_matching_of_size(h, s);
      CHECK(w.has_value() == (s <= nu));
      if (w) {
        CHECK(static_cast<int>(w->edges.size()) == s);
        CHECK(is_valid_matching(h, w->edges));
      }
    }
  }
}

TEST_CASE("cover number against brute force") {
  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 80; ++rep) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const Hypergraph h = test::random_hypergraph(rng, 8, k, 1, 4);
    CHECK(cover_number(h) == test::brute_tau(h));
  }
}

TEST_CASE("small fixed cases") {
  CHECK(matching_number(complete_hypergraph(9, 3)).nu == 3);
  CHECK(matching_number(complete_hypergraph(8, 3)).nu == 2);
  CHECK(matching_number(Hypergraph(5, 2, {})).nu == 0);
  CHECK(cover_number(complete_hypergraph(5, 2)) == 4);
  // Fano plane: intersecting, cover number 3.
  const Hypergraph fano(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
  CHECK(matching_number(fano).nu == 1);
  CHECK(cover_number(fano) == 3);
  CHECK_FALSE(is_valid_matching(fano, {{1, 2, 3}, {1, 4, 5}}));
}
