#include "emc/interval.hpp"

#include "emc/random.hpp"

#include <doctest.h>

#include <random>

using namespace emc;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  return make_rational(static_cast<long>(uniform_below(rng, 41)) - 20, 1 + static_cast<long>(uniform_below(rng, 7)));
}

Interval random_interval(std::mt19937_64& rng) {
  Rational a = random_rational(rng), b = random_rational(rng);
  if (b < a) std::swap(a, b);
  return Interval(a, b);
}

std::vector<Rational> samples(const Interval& a) { return {a.lo, a.midpoint(), a.hi}; }

}  // namespace

TEST_CASE("construction and predicates") {
  const Interval a(make_rational(-1, 2), 3);
  CHECK(a.width() == make_rational(7, 2));
  CHECK(a.midpoint() == make_rational(5, 4));
  CHECK(a.contains(Rational(0)));
  CHECK_FALSE(a.contains(Rational(4)));
  CHECK_FALSE(a.positive());
  CHECK(Interval(1, 2).positive());
  CHECK(Interval(-2, -1).negative());
  CHECK(Interval(5).is_point());
  CHECK_THROWS_AS(Interval(2, 1), std::invalid_argument);
  CHECK(to_string(Interval(make_rational(1, 3), 1)) == "[1/3, 1]");
}

TEST_CASE("even powers of straddling intervals start at zero") {
  CHECK(power(Interval(-2, 1), 2) == Interval(0, 4));
  CHECK(power(Interval(-2, 1), 3) == Interval(-8, 1));
  CHECK(power(Interval(-3, -1), 2) == Interval(1, 9));
  CHECK(power(Interval(-3, 2), 0) == Interval(1));
}

TEST_CASE("operations enclose every sampled point") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 500; ++rep) {
    const Interval a = random_interval(rng), b = random_interval(rng);
    const Interval sum = a + b, diff = a - b, prod = a * b, neg = -a, mx = max(a, b), mn = min(a, b), hl = hull(a, b);
    const Interval sq = power(a, 2), cube = power(a, 3);
    for (const auto& x : samples(a)) {
      CHECK(neg.contains(-x));
      CHECK(sq.contains(x * x));
      CHECK(cube.contains(x * x * x));
      CHECK(hl.contains(x));
      for (const auto& y : samples(b)) {
        CHECK(sum.contains(x + y));
        CHECK(diff.contains(x - y));
        CHECK(prod.contains(x * y));
        CHECK(mx.contains(std::max(x, y)));
        CHECK(mn.contains(std::min(x, y)));
      }
    }
    // Endpoints are attained, so the enclosures are tight for single operations.
    CHECK(sum == Interval(a.lo + b.lo, a.hi + b.hi));
  }
}

TEST_CASE("boxes") {
  Box b{{"x", "y"}, {Interval(0, 1), Interval(0, 4)}, "P1"};
  CHECK(b["y"] == Interval(0, 4));
  CHECK_THROWS(b["z"]);
  CHECK(b.widest() == 1);
  auto [l, r] = b.bisect(1);
  CHECK(l["y"] == Interval(0, 2));
  CHECK(r["y"] == Interval(2, 4));
  CHECK(l.region_tag == "P1");
  CHECK(b.volume() == 4);
  CHECK(l.volume() + r.volume() == b.volume());
  CHECK(b.center() == std::vector<Rational>{make_rational(1, 2), 2});
  Box tie{{"a", "b"}, {Interval(0, 1), Interval(3, 4)}, ""};
  CHECK(tie.widest() == 0);
}
