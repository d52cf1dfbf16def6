#include "emc/certificate.hpp"
#include "emc/inequality.hpp"

#include <doctest.h>

#include <set>
#include <sstream>
#include <tuple>

using namespace emc;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

const Rational kZmax = q(1, 100000);

Certificate round_trip(const Certificate& c) {
  std::stringstream ss;
  write_certificate(ss, c);
  return read_certificate(ss);
}

}  // namespace

TEST_CASE("calculate inequality is proved and replays") {
  const Certificate cert = certify_calculate_lemma(kZmax);
  REQUIRE(cert.status == CertStatus::proved);
  CHECK(cert.boxes <= 10'000'000);
  CHECK_FALSE(cert.leaves.empty());
  for (const auto& leaf : cert.leaves) CHECK(leaf.margin.positive());
  CHECK(cert.params.at("delta") == stability_delta());
  CHECK(cert.params.at("zmax") == kZmax);

  const ReplayReport direct = replay_certificate(cert);
  CHECK(direct.ok);
  CHECK(direct.proves);
  CHECK(direct.leaves_checked == cert.leaves.size());

  const Certificate back = round_trip(cert);
  CHECK(back.leaves.size() == cert.leaves.size());
  CHECK(replay_certificate(back).proves);

  // Same inputs, same certificate.
  std::stringstream a, b;
  write_certificate(a, cert);
  write_certificate(b, certify_calculate_lemma(kZmax));
  CHECK(a.str() == b.str());
}

TEST_CASE("tampered certificates are rejected") {
  const Certificate cert = certify_calculate_lemma(kZmax);
  Certificate dropped = cert;
  dropped.leaves.pop_back();
  CHECK_FALSE(replay_certificate(dropped).proves);

  Certificate widened = cert;
  widened.leaves.front().box.coords[0].hi += q(1, 1000);
  CHECK_FALSE(replay_certificate(widened).proves);

  Certificate lied = cert;
  lied.leaves.front().margin = Interval(1000, 2000);
  CHECK_FALSE(replay_certificate(lied).proves);

  std::stringstream broken("emc-certificate 2\n");
  CHECK_THROWS(read_certificate(broken));
}

TEST_CASE("margin matches g on the original coordinates") {
  const Rational c = 4 - stability_delta();
  for (const auto& [x, mu, z] : std::vector<std::tuple<Rational, Rational, Rational>>{
           {q(1, 2), q(1, 2), q(1, 200000)}, {q(5, 8), 1, q(1, 100000)}, {q(3, 5), q(9, 10), q(3, 1000000)}}) {
    const Rational a = 1 - mu * x, b = 1 - x;
    const Rational beta = x * (c - 3 * mu);
    const CalculateValue g = eval_calculate_g(a, b, power(z, 4));
    const Rational m = certificate_margin("calculate", "none", "P1", {x, mu, z});
    CHECK(m == beta * power(c, 3) * (-52 * power(z, 3) - g.g));
  }
  for (const auto& [x, mu] : std::vector<std::pair<Rational, Rational>>{{q(2, 3), q(1, 2)}, {q(13, 20), q(4, 5)}}) {
    const Rational a = 1 - mu * x, b = 1 - x;
    const Rational beta = x * (c - 3 * mu);
    const Rational g = eval_calculate_g(a, b, power(q(1, 100000), 4)).g;
    const Rational m = std::min(certificate_margin("calculate", "none", "P2:max1", {x, mu, q(1, 100000)}),
                                certificate_margin("calculate", "none", "P2:max2", {x, mu, q(1, 100000)}));
    CHECK(m == beta * power(c, 3) * (-q(1, 8100) - g));
  }
}

TEST_CASE("corner point a = b = 1/4") {
  for (const Rational& z : {q(1, 100000), q(1, 10000000)}) {
    const Rational m1 = certificate_margin("calculate", "none", "P3:max1", {q(3, 4), 1, z});
    const Rational m2 = certificate_margin("calculate", "none", "P3:max2", {q(3, 4), 1, z});
    CHECK(std::min(m1, m2) > 0);
  }
}

TEST_CASE("mutations") {
  for (auto mut : {CalculateMutation::negate_lead, CalculateMutation::reverse}) {
    const Certificate c = certify_calculate_lemma(kZmax, 60, 10'000'000, mut);
    REQUIRE(c.status == CertStatus::counterexample);
    std::vector<Rational> point;
    for (const auto& [name, v] : c.counterexample_point) point.push_back(v);
    CHECK(c.counterexample_margin <= 0);
    CHECK(certificate_margin("calculate", to_string(mut), c.counterexample_region, point) <= 0);
    const ReplayReport r = replay_certificate(round_trip(c));
    CHECK(r.ok);
    CHECK_FALSE(r.proves);
  }
  // Flipping p only weakens the claim, so it still holds.
  CHECK(certify_calculate_lemma(kZmax, 60, 10'000'000, CalculateMutation::flip_p).status == CertStatus::proved);

  const Certificate c5 = certify_maxvalue_coeffs(60, 10'000'000, MaxvalueMutation::negate_c5_term);
  REQUIRE(c5.status == CertStatus::counterexample);
  CHECK(c5.counterexample_region == "C5");

  CHECK(parse_calculate_mutation("flip-p") == CalculateMutation::flip_p);
  CHECK_THROWS_AS(parse_calculate_mutation("nope"), std::invalid_argument);
  CHECK(std::string(to_string(MaxvalueMutation::negate_c5_term)) == "negate-c5-term");
}

TEST_CASE("coefficient positivity is proved and replays") {
  const Certificate cert = certify_maxvalue_coeffs();
  REQUIRE(cert.status == CertStatus::proved);
  std::set<std::string> regions;
  for (const auto& leaf : cert.leaves) regions.insert(leaf.region);
  CHECK(regions == std::set<std::string>{"C1", "C2", "C3", "C4", "C5"});
  CHECK(replay_certificate(round_trip(cert)).proves);
}

TEST_CASE("budgets and arguments") {
  CHECK(certify_calculate_lemma(kZmax, 60, 5).status == CertStatus::budget_exhausted);
  CHECK(certify_calculate_lemma(kZmax, 2).status == CertStatus::budget_exhausted);
  CHECK_THROWS_AS(certify_calculate_lemma(q(1, 1000)), std::invalid_argument);
  CHECK_THROWS_AS(certify_calculate_lemma(0), std::invalid_argument);
}
