#pragma once

#include "emc/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace emc {

using ScalarFn = std::function<Rational(const Rational&)>;

/// Parameters of the convexity lemma: integers m, k, s and a in [0,1).
struct ConvexInstance {
  int m = 0;
  int k = 0;
  int s = 0;
  Rational a;
};

/// f = max{f1, f2} with
///   f1(x) = C(m,k-1) - C(m - u, k-1),  f2(x) = C((k-1)u + k-2, k-1),
/// u = (1-a)s/(1-x). Binomials are falling-factorial polynomials.
struct ConvexValue {
  Rational f, f1, f2;
};
ConvexValue eval_convex_branches(const Rational& x, const ConvexInstance& in);
Rational eval_f_lemma_convex(const Rational& x, int m, int k, int s, const Rational& a);

/// h_j(x) = (m-j)/(m-j-u) - k/(k-2).
Rational eval_hj(const Rational& x, const ConvexInstance& in, int j);

/// Closed-form derivatives of g1 = ln C(m-u, k-1) and g2 = ln C((k-1)u+k-2, k-1).
Rational g1_prime(const Rational& x, const ConvexInstance& in);
Rational g1_second(const Rational& x, const ConvexInstance& in);
Rational g2_prime(const Rational& x, const ConvexInstance& in);
Rational g2_second(const Rational& x, const ConvexInstance& in);
/// e^{g1} and e^{g2}, i.e. the binomials themselves.
Rational exp_g1(const Rational& x, const ConvexInstance& in);
Rational exp_g2(const Rational& x, const ConvexInstance& in);
/// f2'' = e^{g2} ((g2')^2 + g2'').
Rational f2_second_closed(const Rational& x, const ConvexInstance& in);

struct ConvexityReport {
  int grid_points = 0;
  Rational lo, hi, step;
  Rational min_second_difference;
  Rational argmin;
  bool convex = false;
  // Filled when an instance is supplied: h_j on the grid of [0,(1+a)/2].
  bool hj_checked = false;
  Rational max_hj;
  int max_hj_index = -1;
  Rational max_hj_at;
  bool hj_nonpositive = false;
};

/// Exact second differences of f on a uniform grid of [lo,hi].
ConvexityReport check_convexity(const ScalarFn& f, const Rational& lo, const Rational& hi, int grid_points,
                                const ConvexInstance* hj_instance = nullptr);

struct FiniteDiffReport {
  int order = 1;
  Rational point;
  Rational closed_form;
  std::vector<Rational> steps;
  std::vector<Rational> estimates;
  std::vector<Rational> discrepancies;  // |estimate - closed_form|
  bool monotone = false;                // nonincreasing, strictly unless zero
};

/// Central differences of order 1 or 2 against a closed-form value.
FiniteDiffReport finite_diff_check(const ScalarFn& f, const Rational& point, int order,
                                   const std::vector<Rational>& h_seq, const Rational& closed_form);

enum class PreboundCase { general, half };

/// max{C(3s-1,3) - C(3s-1-mu s,3), C(3 mu s+2,3)}, plus C(2 mu s,2)(m-3s+1)
/// in the general case. Requires s <= (m-2)/(4-delta) and 0 < mu <= 1.
Rational eval_prebound(int m, int s, const Rational& mu, PreboundCase c);
/// Same expression with rational m and s and no precondition checks.
Rational prebound_expression(const Rational& m, const Rational& s, const Rational& mu, PreboundCase c);

/// The three b-regimes: b >= 3/8, 1/3 <= b < 3/8, 1/4 <= b < 1/3.
enum class BRegime { high, middle, low };
const char* to_string(BRegime r);
BRegime regime_of(const Rational& b);

struct RegimeParams {
  Rational mu;    // (1-a)/(1-b)
  Rational beta;  // 1 - delta + 3a - (4-delta)b
};
/// Validates 1/4 <= b <= a < 1.
RegimeParams regime_params(const Rational& a, const Rational& b);

struct H0Value {
  BRegime regime = BRegime::high;
  Rational h0, h;
};
struct H0Report {
  RegimeParams params;
  H0Value value;
  std::optional<H0Value> adjacent;  // the neighbouring formula at b = 3/8 or 1/3
  bool discontinuous = false;
};
H0Value eval_h0_h_in(BRegime regime, const Rational& s, const Rational& m, const Rational& a, const Rational& b);
H0Report eval_h0_h(const Rational& s, const Rational& m, const Rational& a, const Rational& b);

struct CpCqValue {
  BRegime regime = BRegime::high;
  Rational cp, cq;
  Rational cq_corrected;  // middle regime: coefficient 12(1-delta) in place of 3(1-delta)(4-delta)
};
struct CpCqReport {
  RegimeParams params;
  Rational rho;  // epsilon^(1/4)
  Rational eta;
  CpCqValue value;
  std::optional<CpCqValue> adjacent;
  Rational cp_bound;  // -(500/3) epsilon^(1/2)
  Rational cq_bound;  // -(65/6) epsilon
  bool cp_ok = false;
  bool cq_ok = false;
};
CpCqValue eval_Cp_Cq_in(BRegime regime, const Rational& a, const Rational& b, const Rational& eta);
/// epsilon must be the fourth power of a rational; eta defaults to 1000 epsilon^(1/4).
/// Requires 1/4 <= b <= a < 1 - 5 epsilon^(1/4).
CpCqReport eval_Cp_Cq(const Rational& a, const Rational& b, const Rational& epsilon);
CpCqReport eval_Cp_Cq(const Rational& a, const Rational& b, const Rational& epsilon, const Rational& eta);

/// C_i(alpha) in terms of mu, beta (no region checks).
Rational c_coefficient(int i, const Rational& alpha, const Rational& mu, const Rational& beta);
/// C_i(alpha) for (a,b); C_2, C_3 only for 1/3 <= b < 3/8.
Rational eval_C_coeffs(const Rational& alpha, const Rational& a, const Rational& b, int i);

struct CIdentityReport {
  Rational c4_residual_displayed;   // C4 - (1-d)/(beta+1-d) C1 - 6 beta (28 - 9mu) alpha^2
  Rational c5_residual_displayed;   // C5 - (1-d)/(beta+1-d) C1 - 162 beta alpha^2
  Rational c4_residual_corrected;   // with 6 beta (27 - 9mu + mu^2) alpha^2
  Rational c5_residual_corrected;   // with 162 beta mu^2 alpha^2
  bool displayed_hold = false;
  bool corrected_hold = false;
};
CIdentityReport check_C_identities(const Rational& alpha, const Rational& a, const Rational& b);

/// g(a,b) = f(a,b) - ((1-delta)/beta)(1 - mu/c)^3 and its required upper bound:
/// -52 epsilon^(3/4) for b >= 3/8, -1/8100 otherwise.
struct CalculateValue {
  BRegime regime = BRegime::high;
  Rational g, bound;
  bool holds = false;
};
CalculateValue eval_calculate_g_in(BRegime regime, const Rational& a, const Rational& b, const Rational& epsilon);
CalculateValue eval_calculate_g(const Rational& a, const Rational& b, const Rational& epsilon);

}  // namespace emc
