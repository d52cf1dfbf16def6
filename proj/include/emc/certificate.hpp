#pragma once

#include "emc/interval.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace emc {

enum class CertStatus { proved, counterexample, budget_exhausted };
const char* to_string(CertStatus s);

/// One proved piece: the margin interval is strictly positive on `box`.
/// `region` names the sub-target (piece of the piecewise definition, and
/// the branch of a split max{}).
struct CertLeaf {
  std::string region;
  Box box;
  Interval margin;
};

struct Certificate {
  std::string target;    // "calculate" or "maxvalue"
  std::string mutation;  // "none" unless a deliberately wrong variant was checked
  std::map<std::string, Rational> params;
  int max_depth = 60;
  std::uint64_t max_boxes = 10'000'000;
  CertStatus status = CertStatus::budget_exhausted;
  std::uint64_t boxes = 0;   // margin evaluations
  std::uint64_t splits = 0;
  std::vector<CertLeaf> leaves;  // sorted canonically
  // Set when status is counterexample.
  std::string counterexample_region;
  std::vector<std::pair<std::string, Rational>> counterexample_point;
  Rational counterexample_margin;
};

/// Mutations of the calculate inequality:
///   negate_lead - the (1-delta)(cx-y)^3 term enters with the wrong sign;
///   flip_p      - p(x,z) enters with the opposite sign (a weaker claim);
///   reverse     - the comparison is reversed.
enum class CalculateMutation { none, negate_lead, flip_p, reverse };
enum class MaxvalueMutation { none, negate_c5_term };
const char* to_string(CalculateMutation m);
const char* to_string(MaxvalueMutation m);
CalculateMutation parse_calculate_mutation(const std::string& s);
MaxvalueMutation parse_maxvalue_mutation(const std::string& s);

/// Certifies (1-d)(cx-y)^3 - (cx-3y) h(x,y) > (cx-3y) p(x,z), c = 4-d, on
/// 0 < y <= x <= 3/4, 0 < z <= z_max, after substituting y = mu x and
/// dividing by x^3. The closed box x in [0,3/4], mu in [0,1], z in [0,z_max]
/// contains the stated region, and each branch of the max{} in h is
/// certified separately.
Certificate certify_calculate_lemma(const Rational& z_max, int max_depth = 60, std::uint64_t max_boxes = 10'000'000,
                                    CalculateMutation mutation = CalculateMutation::none);

/// Certifies C_i(alpha) > 0 on alpha in [0, 1/(4-d)], mu in [0,1] and
/// x = 1-b in [0,3/4] (x in [5/8,2/3] for C_2 and C_3), with beta = x(c - 3 mu).
Certificate certify_maxvalue_coeffs(int max_depth = 60, std::uint64_t max_boxes = 10'000'000,
                                    MaxvalueMutation mutation = MaxvalueMutation::none);

/// Exact margin of a certificate's sub-target at a point (coordinates in
/// the region's box order).
Rational certificate_margin(const std::string& target, const std::string& mutation, const std::string& region,
                           const std::vector<Rational>& point);

void write_certificate(std::ostream& out, const Certificate& cert);
Certificate read_certificate(std::istream& in);

struct ReplayReport {
  bool ok = false;
  bool proves = false;  // ok and status proved with full coverage
  std::uint64_t leaves_checked = 0;
  std::string failure;
};

/// Re-derives every leaf margin by exact interval evaluation and checks
/// that the leaves tile each sub-target's root box under the bisection rule.
/// For a counterexample, re-evaluates the point exactly.
ReplayReport replay_certificate(const Certificate& cert);

}  // namespace emc
