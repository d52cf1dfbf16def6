#include "emc/inequality.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace emc {

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

const Rational& four_minus_delta() {
  static const Rational c = 4 - stability_delta();
  return c;
}

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

void check_instance(const ConvexInstance& in) {
  if (in.k < 3 || in.s < 1) throw std::invalid_argument("convex instance needs k >= 3 and s >= 1");
  if (in.m < in.k * in.s + in.k - 2) throw std::invalid_argument("convex instance needs m >= ks + k - 2");
  if (in.a < 0 || in.a >= 1) throw std::invalid_argument("convex instance needs a in [0,1)");
}

Rational u_of(const Rational& x, const ConvexInstance& in) {
  if (x >= 1) throw std::invalid_argument("x must be < 1, got " + to_string(x));
  Rational u = (1 - in.a) * in.s / (1 - x);
  u.canonicalize();
  return u;
}

// max{27 - (3-mu)^3, 27 mu^3}
Rational clique_max(const Rational& mu) { return std::max(Rational(27 - power(3 - mu, 3)), Rational(27 * power(mu, 3))); }

}  // namespace

ConvexValue eval_convex_branches(const Rational& x, const ConvexInstance& in) {
  check_instance(in);
  const Rational u = u_of(x, in);
  ConvexValue v;
  v.f1 = falling_binomial(in.m, in.k - 1) - falling_binomial(in.m - u, in.k - 1);
  v.f2 = falling_binomial((in.k - 1) * u + in.k - 2, in.k - 1);
  v.f = std::max(v.f1, v.f2);
  return v;
}

Rational eval_f_lemma_convex(const Rational& x, int m, int k, int s, const Rational& a) {
  return eval_convex_branches(x, ConvexInstance{m, k, s, a}).f;
}

Rational eval_hj(const Rational& x, const ConvexInstance& in, int j) {
  check_instance(in);
  if (j < 0 || j > in.k - 2) throw std::invalid_argument("h_j needs 0 <= j <= k-2");
  const Rational u = u_of(x, in);
  Rational r = Rational(in.m - j) / (in.m - j - u) - Rational(in.k, in.k - 2);
  r.canonicalize();
  return r;
}

Rational g1_prime(const Rational& x, const ConvexInstance& in) {
  const Rational u = u_of(x, in);
  Rational sum = 0;
  for (int i = 0; i <= in.k - 2; ++i) sum += 1 / (in.m - i - u);
  return -(1 - in.a) * in.s / power(1 - x, 2) * sum;
}

Rational g1_second(const Rational& x, const ConvexInstance& in) {
  const Rational u = u_of(x, in);
  Rational s1 = 0, s2 = 0;
  for (int i = 0; i <= in.k - 2; ++i) {
    const Rational d = in.m - i - u;
    s1 += 1 / d;
    s2 += 1 / (d * d);
  }
  const Rational as = (1 - in.a) * in.s;
  return -2 * as / power(1 - x, 3) * s1 - as * as / power(1 - x, 4) * s2;
}

Rational g2_prime(const Rational& x, const ConvexInstance& in) {
  u_of(x, in);
  const Rational w = (in.k - 1) * (1 - in.a) * in.s;
  Rational sum = 0;
  for (int i = 0; i <= in.k - 2; ++i) sum += 1 / (w + (in.k - 2 - i) * (1 - x));
  return w / (1 - x) * sum;
}

Rational g2_second(const Rational& x, const ConvexInstance& in) {
  u_of(x, in);
  const Rational w = (in.k - 1) * (1 - in.a) * in.s;
  Rational sum = 0;
  for (int i = 0; i <= in.k - 2; ++i) {
    const Rational d = w + (in.k - 2 - i) * (1 - x);
    sum += (w + 2 * (in.k - 2 - i) * (1 - x)) / (d * d);
  }
  return w / power(1 - x, 2) * sum;
}

Rational exp_g1(const Rational& x, const ConvexInstance& in) { return falling_binomial(in.m - u_of(x, in), in.k - 1); }

Rational exp_g2(const Rational& x, const ConvexInstance& in) {
  return falling_binomial((in.k - 1) * u_of(x, in) + in.k - 2, in.k - 1);
}

Rational f2_second_closed(const Rational& x, const ConvexInstance& in) {
  const Rational d1 = g2_prime(x, in);
  return exp_g2(x, in) * (d1 * d1 + g2_second(x, in));
}

ConvexityReport check_convexity(const ScalarFn& f, const Rational& lo, const Rational& hi, int grid_points,
                                const ConvexInstance* hj_instance) {
  if (grid_points < 3) throw std::invalid_argument("check_convexity needs at least 3 grid points");
  if (lo >= hi) throw std::invalid_argument("check_convexity needs lo < hi");
  ConvexityReport r;
  r.grid_points = grid_points;
  r.lo = lo;
  r.hi = hi;
  r.step = (hi - lo) / (grid_points - 1);
  std::vector<Rational> values;
  values.reserve(grid_points);
  for (int i = 0; i < grid_points; ++i) values.push_back(f(lo + i * r.step));
  for (int i = 1; i + 1 < grid_points; ++i) {
    const Rational d2 = values[i - 1] - 2 * values[i] + values[i + 1];
    if (i == 1 || d2 < r.min_second_difference) {
      r.min_second_difference = d2;
      r.argmin = lo + i * r.step;
    }
  }
  r.convex = r.min_second_difference >= 0;

  if (hj_instance) {
    const ConvexInstance& in = *hj_instance;
    const Rational top = (1 + in.a) / 2;
    const Rational step = top / (grid_points - 1);
    r.hj_checked = true;
    bool first = true;
    for (int i = 0; i < grid_points; ++i) {
      const Rational x = i * step;
      for (int j = 0; j <= in.k - 2; ++j) {
        const Rational v = eval_hj(x, in, j);
        if (first || v > r.max_hj) {
          r.max_hj = v;
          r.max_hj_index = j;
          r.max_hj_at = x;
          first = false;
        }
      }
    }
    r.hj_nonpositive = r.max_hj <= 0;
  }
  return r;
}

FiniteDiffReport finite_diff_check(const ScalarFn& f, const Rational& point, int order,
                                   const std::vector<Rational>& h_seq, const Rational& closed_form) {
  if (order != 1 && order != 2) throw std::invalid_argument("finite_diff_check order must be 1 or 2");
  FiniteDiffReport r;
  r.order = order;
  r.point = point;
  r.closed_form = closed_form;
  const Rational mid = order == 2 ? f(point) : Rational(0);
  for (const Rational& h : h_seq) {
    if (h <= 0) throw std::invalid_argument("finite difference steps must be positive");
    const Rational up = f(point + h), down = f(point - h);
    Rational est = order == 1 ? Rational((up - down) / (2 * h)) : Rational((up - 2 * mid + down) / (h * h));
    est.canonicalize();
    r.steps.push_back(h);
    r.estimates.push_back(est);
    r.discrepancies.push_back(abs_value(est - closed_form));
  }
  r.monotone = true;
  for (std::size_t i = 1; i < r.discrepancies.size(); ++i) {
    const Rational& prev = r.discrepancies[i - 1];
    const Rational& cur = r.discrepancies[i];
    if (cur > prev || (cur == prev && cur != 0)) r.monotone = false;
  }
  return r;
}

Rational prebound_expression(const Rational& m, const Rational& s, const Rational& mu, PreboundCase c) {
  Rational v = std::max(Rational(falling_binomial(3 * s - 1, 3) - falling_binomial(3 * s - 1 - mu * s, 3)),
                        falling_binomial(3 * mu * s + 2, 3));
  if (c == PreboundCase::general) v += falling_binomial(2 * mu * s, 2) * (m - 3 * s + 1);
  return v;
}

Rational eval_prebound(int m, int s, const Rational& mu, PreboundCase c) {
  if (s < 1) throw std::invalid_argument("prebound needs s >= 1");
  if (mu <= 0 || mu > 1) throw std::invalid_argument("prebound needs 0 < mu <= 1");
  if (Rational(s) * four_minus_delta() > m - 2) throw std::invalid_argument("prebound needs s <= (m-2)/(4-delta)");
  return prebound_expression(m, s, mu, c);
}

const char* to_string(BRegime r) {
  switch (r) {
    case BRegime::high: return "b>=3/8";
    case BRegime::middle: return "1/3<=b<3/8";
    case BRegime::low: return "1/4<=b<1/3";
  }
  return "?";
}

BRegime regime_of(const Rational& b) {
  if (b >= q(3, 8)) return BRegime::high;
  if (b >= q(1, 3)) return BRegime::middle;
  return BRegime::low;
}

RegimeParams regime_params(const Rational& a, const Rational& b) {
  if (b < q(1, 4) || b > a || a >= 1)
    throw std::invalid_argument("need 1/4 <= b <= a < 1, got a=" + to_string(a) + " b=" + to_string(b));
  RegimeParams p;
  p.mu = (1 - a) / (1 - b);
  p.mu.canonicalize();
  const Rational& d = stability_delta();
  p.beta = 1 - d + 3 * a - (4 - d) * b;
  return p;
}

namespace {

std::optional<BRegime> adjacent_regime(const Rational& b) {
  if (b == q(3, 8)) return BRegime::middle;
  if (b == q(1, 3)) return BRegime::low;
  return std::nullopt;
}

}  // namespace

H0Value eval_h0_h_in(BRegime regime, const Rational& s, const Rational& m, const Rational& a, const Rational& b) {
  const RegimeParams p = regime_params(a, b);
  const Rational& d = stability_delta();
  H0Value v;
  v.regime = regime;
  switch (regime) {
    case BRegime::high: v.h0 = falling_binomial(m, 3) - falling_binomial(m - p.mu * s, 3); break;
    case BRegime::middle: v.h0 = prebound_expression(m, s, p.mu, PreboundCase::general); break;
    case BRegime::low: v.h0 = prebound_expression(m, s, p.mu, PreboundCase::half); break;
  }
  v.h = (1 - a) * s * v.h0 - (1 - d) * (1 - a) * s / p.beta * falling_binomial(m - p.mu * s, 3);
  return v;
}

H0Report eval_h0_h(const Rational& s, const Rational& m, const Rational& a, const Rational& b) {
  H0Report r;
  r.params = regime_params(a, b);
  r.value = eval_h0_h_in(regime_of(b), s, m, a, b);
  if (auto adj = adjacent_regime(b)) {
    r.adjacent = eval_h0_h_in(*adj, s, m, a, b);
    r.discontinuous = r.adjacent->h0 != r.value.h0;
  }
  return r;
}

CpCqValue eval_Cp_Cq_in(BRegime regime, const Rational& a, const Rational& b, const Rational& eta) {
  const RegimeParams p = regime_params(a, b);
  const Rational& d = stability_delta();
  const Rational& c = four_minus_delta();
  const Rational& mu = p.mu;
  const Rational tail_p = (1 - d) * power(1 - eta * mu, 3) / p.beta;
  const Rational tail_q = (1 - d) / p.beta * power(1 - mu / c, 3);
  CpCqValue v;
  v.regime = regime;
  Rational bp, bq, bq_corrected;
  switch (regime) {
    case BRegime::high:
      bp = 1 - power(1 - eta * mu, 3) - tail_p;
      bq = 1 - power(1 - mu / c, 3) - tail_q;
      bq_corrected = bq;
      break;
    case BRegime::middle:
      bp = clique_max(mu) * power(eta, 3) + 12 * mu * mu * (1 - 3 * eta) * eta * eta - tail_p;
      bq = (clique_max(mu) + 3 * (1 - d) * c * mu * mu) / power(c, 3) - tail_q;
      bq_corrected = (clique_max(mu) + 12 * (1 - d) * mu * mu) / power(c, 3) - tail_q;
      break;
    case BRegime::low:
      bp = clique_max(mu) * power(eta, 3) - tail_p;
      bq = clique_max(mu) / power(c, 3) - tail_q;
      bq_corrected = bq;
      break;
  }
  v.cp = eta * (1 - a) / 6 * bp;
  v.cq = (1 - a) / (6 * c) * bq;
  v.cq_corrected = (1 - a) / (6 * c) * bq_corrected;
  return v;
}

CpCqReport eval_Cp_Cq(const Rational& a, const Rational& b, const Rational& epsilon) {
  auto rho = exact_root(epsilon, 4);
  if (!rho) throw std::invalid_argument("epsilon must be the fourth power of a rational, got " + to_string(epsilon));
  return eval_Cp_Cq(a, b, epsilon, 1000 * *rho);
}

CpCqReport eval_Cp_Cq(const Rational& a, const Rational& b, const Rational& epsilon, const Rational& eta) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  auto rho = exact_root(epsilon, 4);
  if (!rho) throw std::invalid_argument("epsilon must be the fourth power of a rational, got " + to_string(epsilon));
  if (a >= 1 - 5 * *rho) throw std::invalid_argument("need a < 1 - 5 epsilon^(1/4)");
  CpCqReport r;
  r.params = regime_params(a, b);
  r.rho = *rho;
  r.eta = eta;
  r.value = eval_Cp_Cq_in(regime_of(b), a, b, eta);
  if (auto adj = adjacent_regime(b)) r.adjacent = eval_Cp_Cq_in(*adj, a, b, eta);
  r.cp_bound = -q(500, 3) * power(*rho, 2);
  r.cq_bound = -q(65, 6) * epsilon;
  r.cp_ok = r.value.cp < r.cp_bound;
  r.cq_ok = r.value.cq < r.cq_bound;
  return r;
}

Rational c_coefficient(int i, const Rational& alpha, const Rational& mu, const Rational& beta) {
  const Rational& d = stability_delta();
  const Rational a2 = alpha * alpha;
  switch (i) {
    case 1: return (beta + 1 - d) * (6 * mu * mu * a2 - 9 * mu * alpha + 3);
    case 2:
      return 6 * (27 * beta - 45 * beta * mu + (beta + 1 - d) * mu * mu) * a2 + 9 * (4 * beta - 1 + d) * mu * alpha +
             3 * (1 - d);
    case 3:
      return 6 * (-36 * beta * mu + (27 * beta + 1 - d) * mu * mu) * a2 + 9 * (4 * beta - 1 + d) * mu * alpha +
             3 * (1 - d);
    case 4: return 6 * (27 * beta - 9 * beta * mu + (beta + 1 - d) * mu * mu) * a2 - 9 * (1 - d) * mu * alpha + 3 * (1 - d);
    case 5: return 6 * (27 * beta + 1 - d) * mu * mu * a2 - 9 * (1 - d) * mu * alpha + 3 * (1 - d);
    default: throw std::invalid_argument("C_i needs 1 <= i <= 5");
  }
}

Rational eval_C_coeffs(const Rational& alpha, const Rational& a, const Rational& b, int i) {
  if (alpha < 0 || alpha * four_minus_delta() > 1) throw std::invalid_argument("need 0 <= alpha <= 1/(4-delta)");
  const RegimeParams p = regime_params(a, b);
  if ((i == 2 || i == 3) && regime_of(b) != BRegime::middle)
    throw std::invalid_argument("C_2 and C_3 apply only for 1/3 <= b < 3/8");
  return c_coefficient(i, alpha, p.mu, p.beta);
}

CIdentityReport check_C_identities(const Rational& alpha, const Rational& a, const Rational& b) {
  const RegimeParams p = regime_params(a, b);
  const Rational& d = stability_delta();
  const Rational& mu = p.mu;
  const Rational& beta = p.beta;
  const Rational a2 = alpha * alpha;
  const Rational base = (1 - d) / (beta + 1 - d) * c_coefficient(1, alpha, mu, beta);
  const Rational c4 = c_coefficient(4, alpha, mu, beta);
  const Rational c5 = c_coefficient(5, alpha, mu, beta);
  CIdentityReport r;
  r.c4_residual_displayed = c4 - base - 6 * beta * (28 - 9 * mu) * a2;
  r.c5_residual_displayed = c5 - base - 162 * beta * a2;
  r.c4_residual_corrected = c4 - base - 6 * beta * (27 - 9 * mu + mu * mu) * a2;
  r.c5_residual_corrected = c5 - base - 162 * beta * mu * mu * a2;
  r.displayed_hold = r.c4_residual_displayed == 0 && r.c5_residual_displayed == 0;
  r.corrected_hold = r.c4_residual_corrected == 0 && r.c5_residual_corrected == 0;
  return r;
}

CalculateValue eval_calculate_g_in(BRegime regime, const Rational& a, const Rational& b, const Rational& epsilon) {
  const RegimeParams p = regime_params(a, b);
  auto rho = exact_root(epsilon, 4);
  if (!rho || epsilon <= 0) throw std::invalid_argument("epsilon must be a positive fourth power");
  const Rational& d = stability_delta();
  const Rational& c = four_minus_delta();
  const Rational& mu = p.mu;
  Rational f;
  switch (regime) {
    case BRegime::high: f = 1 - power(1 - mu / c, 3); break;
    case BRegime::middle: f = (clique_max(mu) + 3 * (1 - d) * c * mu * mu) / power(c, 3); break;
    case BRegime::low: f = clique_max(mu) / power(c, 3); break;
  }
  CalculateValue v;
  v.regime = regime;
  v.g = f - (1 - d) / p.beta * power(1 - mu / c, 3);
  v.bound = regime == BRegime::high ? Rational(-52 * power(*rho, 3)) : -q(1, 8100);
  v.holds = v.g < v.bound;
  return v;
}

CalculateValue eval_calculate_g(const Rational& a, const Rational& b, const Rational& epsilon) {
  return eval_calculate_g_in(regime_of(b), a, b, epsilon);
}

}  // namespace emc
