#include "emc/fractional.hpp"

#include "emc/combinatorics.hpp"

#include <algorithm>
#include <unordered_map>

namespace emc {

FractionalMatching make_fractional_matching(const Hypergraph& h, const std::map<Edge, Rational>& weights) {
  FractionalMatching fm;
  fm.k = h.k();
  for (Vertex v : h.vertices()) fm.loads[v] = 0;
  for (const auto& [e, w] : weights) {
    if (w == 0) continue;
    fm.weights[e] = w;
    fm.size += w;
    for (Vertex v : e) fm.loads[v] += w;
  }
  return fm;
}

FractionalCover make_fractional_cover(const Hypergraph& h, const std::map<Vertex, Rational>& weights) {
  FractionalCover fc;
  for (Vertex v : h.vertices()) {
    auto it = weights.find(v);
    Rational w = it == weights.end() ? Rational(0) : it->second;
    fc.weights[v] = w;
    fc.size += w;
    if (w > 0) fc.support.insert(v);
  }
  return fc;
}

bool is_feasible(const Hypergraph& h, const FractionalMatching& fm) {
  for (const auto& [e, w] : fm.weights)
    if (w < 0 || w > 1 || !h.contains(e)) return false;
  auto again = make_fractional_matching(h, fm.weights);
  if (again.loads != fm.loads || again.size != fm.size) return false;
  for (const auto& [v, load] : fm.loads)
    if (load > 1) return false;
  return true;
}

bool is_feasible(const Hypergraph& h, const FractionalCover& fc) {
  for (const auto& [v, w] : fc.weights)
    if (w < 0 || w > 1) return false;
  for (const auto& e : h.edges()) {
    Rational sum = 0;
    for (Vertex v : e) {
      auto it = fc.weights.find(v);
      if (it != fc.weights.end()) sum += it->second;
    }
    if (sum < 1) return false;
  }
  return true;
}

namespace {

std::unordered_map<Vertex, int> index_of(const std::vector<Vertex>& ground) {
  std::unordered_map<Vertex, int> idx;
  for (std::size_t i = 0; i < ground.size(); ++i) idx[ground[i]] = static_cast<int>(i);
  return idx;
}

// One row per ground vertex: the load of that vertex, over edge variables.
std::vector<Constraint> load_rows(const Hypergraph& h) {
  auto idx = index_of(h.vertices());
  std::vector<Constraint> rows(h.vertices().size());
  for (std::size_t j = 0; j < h.edges().size(); ++j)
    for (Vertex v : h.edges()[j]) rows[idx.at(v)].terms.emplace_back(static_cast<int>(j), 1);
  for (auto& r : rows) {
    r.sense = Sense::le;
    r.rhs = 1;
  }
  return rows;
}

FractionalMatching matching_from_x(const Hypergraph& h, const std::vector<Rational>& x) {
  std::map<Edge, Rational> w;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0) w[h.edges()[j]] = x[j];
  return make_fractional_matching(h, w);
}

}  // namespace

FractionalMatchingResult fractional_matching_number(const Hypergraph& h, std::ostream* trace) {
  LinearProgram lp;
  lp.num_vars = static_cast<int>(h.size());
  lp.objective.assign(h.size(), 1);
  lp.maximize = true;
  lp.constraints = load_rows(h);
  LpSolution sol = solve(lp, trace);
  if (sol.status != LpStatus::optimal) throw std::logic_error("matching program not optimal");
  return {sol.value, matching_from_x(h, sol.x)};
}

namespace {

LinearProgram cover_program(const Hypergraph& h) {
  auto idx = index_of(h.vertices());
  LinearProgram lp;
  lp.num_vars = static_cast<int>(h.vertices().size());
  lp.objective.assign(lp.num_vars, 1);
  lp.maximize = false;
  for (const auto& e : h.edges()) {
    Constraint c;
    for (Vertex v : e) c.terms.emplace_back(idx.at(v), 1);
    c.sense = Sense::ge;
    c.rhs = 1;
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

}  // namespace

FractionalCoverResult fractional_cover_number(const Hypergraph& h, std::ostream* trace) {
  LinearProgram lp = cover_program(h);
  LpSolution sol = solve(lp, trace);
  if (sol.status != LpStatus::optimal) throw std::logic_error("cover program not optimal");
  return {sol.value, lex_max_fractional_cover(h, sol.value)};
}

FractionalCover lex_max_fractional_cover(const Hypergraph& h, const Rational& tau_star) {
  const auto& ground = h.vertices();
  const int n = static_cast<int>(ground.size());
  LinearProgram base = cover_program(h);
  Constraint total;
  for (int i = 0; i < n; ++i) total.terms.emplace_back(i, 1);
  total.sense = Sense::eq;
  total.rhs = tau_star;
  base.constraints.push_back(total);

  std::vector<Rational> fixed;
  Rational fixed_sum = 0;
  std::vector<Rational> last_x(n, 0);
  bool have_x = false;
  for (int i = 0; i < n && fixed_sum < tau_star; ++i) {
    LinearProgram lp = base;
    lp.maximize = true;
    lp.objective.assign(n, 0);
    lp.objective[i] = 1;
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal) throw std::logic_error("lexicographic cover step not optimal");
    last_x = sol.x;
    have_x = true;
    Constraint fix;
    fix.terms.emplace_back(i, 1);
    fix.sense = Sense::eq;
    fix.rhs = sol.value;
    base.constraints.push_back(std::move(fix));
    fixed.push_back(sol.value);
    fixed_sum += sol.value;
  }
  std::map<Vertex, Rational> w;
  for (int i = 0; i < n; ++i) {
    if (i < static_cast<int>(fixed.size())) w[ground[i]] = fixed[i];
    else w[ground[i]] = have_x ? last_x[i] : Rational(0);
  }
  return make_fractional_cover(h, w);
}

SlacknessReport check_complementary_slackness(const FractionalMatching& fm, const FractionalCover& fc) {
  SlacknessReport r;
  r.support_size = static_cast<int>(fc.support.size());
  r.bound = Rational(fm.k) * fm.size;
  r.saturated_ok = true;
  for (Vertex v : fc.support) {
    auto it = fm.loads.find(v);
    if (it == fm.loads.end() || it->second != 1) {
      r.saturated_ok = false;
      r.violations.push_back(v);
    }
  }
  r.support_ok = Rational(r.support_size) <= r.bound;
  r.sizes_equal = fm.size == fc.size;
  return r;
}

TargetTooLarge::TargetTooLarge(const Rational& target, const Rational& nu)
    : std::invalid_argument("target size " + to_string(target) + " exceeds nu* = " + to_string(nu)),
      nu_star(nu) {}

FractionalMatching lex_max_fractional_matching(const Hypergraph& h, const std::vector<Vertex>& order,
                                               const Rational& target) {
  if (target < 0) throw std::invalid_argument("target size must be nonnegative");
  auto idx = index_of(h.vertices());
  {
    std::vector<Vertex> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("order repeats a vertex");
    for (Vertex v : order)
      if (!idx.count(v)) throw std::invalid_argument("order names vertex " + std::to_string(v) + " outside V(H)");
  }
  Rational nu = fractional_matching_number(h).nu_star;
  if (target > nu) throw TargetTooLarge(target, nu);

  const int m = static_cast<int>(h.size());
  LinearProgram base;
  base.num_vars = m;
  base.constraints = load_rows(h);
  Constraint total;
  for (int j = 0; j < m; ++j) total.terms.emplace_back(j, 1);
  total.sense = Sense::eq;
  total.rhs = target;
  base.constraints.push_back(total);
  const auto rows = load_rows(h);

  const Rational full = Rational(h.k()) * target;
  Rational fixed_sum = 0;
  std::vector<Rational> x;
  for (Vertex v : order) {
    if (fixed_sum == full) break;
    LinearProgram lp = base;
    lp.maximize = true;
    lp.objective.assign(m, 0);
    for (const auto& [j, a] : rows[idx.at(v)].terms) lp.objective[j] += a;
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal) throw std::logic_error("lexicographic matching step not optimal");
    x = sol.x;
    Constraint fix = rows[idx.at(v)];
    fix.sense = Sense::eq;
    fix.rhs = sol.value;
    base.constraints.push_back(std::move(fix));
    fixed_sum += sol.value;
  }
  if (x.empty()) {
    base.maximize = true;
    base.objective.assign(m, 0);
    LpSolution sol = solve(base);
    if (sol.status != LpStatus::optimal) throw std::logic_error("fractional matching of target size not found");
    x = sol.x;
  }
  return matching_from_x(h, x);
}

std::vector<Vertex> boundary_set(const FractionalMatching& fm) {
  std::vector<Vertex> a;
  for (const auto& [v, load] : fm.loads)
    if (load > 0 && load < 1) a.push_back(v);
  return a;
}

PerfectExtension extend_to_perfect_fm(const Hypergraph& h, int t, const FractionalMatching& fm) {
  if (h.k() != 4) throw PreconditionError("extension requires a 4-graph");
  if (!h.full_ground_set()) throw PreconditionError("extension requires vertex set [n]");
  const int total = h.n();
  if (t < 0 || t > total) throw PreconditionError("t outside [0, n]");
  if (total % 4 != 0) throw PreconditionError("|V(H)| must be divisible by 4");
  const int s_star = total / 4 - t;
  if (s_star < 0) throw PreconditionError("s* = |V|/4 - t is negative");
  if (!is_stable(h)) throw PreconditionError("H is not stable");
  const Integer full_degree = binomial(total - 1, 3);
  for (Vertex i = 1; i <= t; ++i)
    if (Integer(static_cast<unsigned long>(h.degree(i))) != full_degree)
      throw PreconditionError("vertex " + std::to_string(i) + " of T does not have full degree");

  for (const auto& [e, w] : fm.weights) {
    if (!h.contains(e)) throw PreconditionError("matching uses edge " + edge_to_string(e) + " outside H");
    if (e.front() <= t) throw PreconditionError("matching uses edge " + edge_to_string(e) + " meeting T");
    if (w < 0 || w > 1) throw PreconditionError("matching weight outside [0,1]");
  }
  auto loads = make_fractional_matching(h, fm.weights).loads;
  if (fm.size != s_star) throw PreconditionError("matching size is not s* = " + std::to_string(s_star));
  for (Vertex v = t + 1; v <= total; ++v) {
    if (loads[v] > 1) throw PreconditionError("load above 1 at vertex " + std::to_string(v));
    if (v > t + 1 && loads[v] > loads[v - 1])
      throw PreconditionError("loads increase at vertex " + std::to_string(v));
  }
  int q = t;
  while (q < total && loads[q + 1] == 1) ++q;
  int ell = 0;
  while (q + ell < total && loads[q + ell + 1] > 0 && loads[q + ell + 1] < 1) ++ell;
  if (ell > 4) throw PreconditionError("boundary set has more than 4 vertices");

  PerfectExtension out;
  out.q = q;
  out.ell = ell;
  out.s_star = s_star;
  out.p = t + 4 * s_star - q;

  std::map<Edge, Rational> weights = fm.weights;
  if (t == 0) {
    if (ell != 0 || q != total) throw PreconditionError("t = 0 requires the matching to be perfect already");
    out.fm = make_fractional_matching(h, weights);
    return out;
  }
  const int base = t + 4 * s_star;
  if (ell == 0 && q != base) throw PreconditionError("empty boundary requires q = t + 4s*");
  if (ell > 0 && !(out.p >= 1 && out.p < ell)) throw PreconditionError("boundary offset p outside [1, |A|)");

  for (Vertex i = 2; i <= t; ++i) weights[{i, base + 3 * i - 2, base + 3 * i - 1, base + 3 * i}] = 1;
  if (ell == 0) {
    weights[{1, base + 1, base + 2, base + 3}] = 1;
  } else {
    std::vector<Vertex> b, a;
    for (Vertex v = q + ell + 1; v <= base + 3; ++v) b.push_back(v);
    for (int j = 1; j <= ell; ++j) a.push_back(q + j);
    for_each_subset(a, ell - out.p, [&](std::span<const int> part) {
      Edge e{1};
      e.insert(e.end(), b.begin(), b.end());
      e.insert(e.end(), part.begin(), part.end());
      std::sort(e.begin(), e.end());
      out.e0.push_back(e);
      return true;
    });
    LinearProgram lp;
    lp.num_vars = static_cast<int>(out.e0.size());
    lp.objective.assign(lp.num_vars, 0);
    for (int j = 1; j <= ell; ++j) {
      Constraint c;
      for (int idx = 0; idx < lp.num_vars; ++idx)
        if (std::binary_search(out.e0[idx].begin(), out.e0[idx].end(), q + j)) c.terms.emplace_back(idx, 1);
      c.sense = Sense::eq;
      c.rhs = 1 - loads[q + j];
      lp.constraints.push_back(std::move(c));
    }
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal) throw PreconditionError("boundary equation system has no nonnegative solution");
    for (std::size_t idx = 0; idx < out.e0.size(); ++idx)
      if (sol.x[idx] != 0) weights[out.e0[idx]] += sol.x[idx];
  }
  for (const auto& [e, w] : weights)
    if (!h.contains(e)) throw PreconditionError("extension edge " + edge_to_string(e) + " is not in H");
  out.fm = make_fractional_matching(h, weights);
  for (const auto& [v, load] : out.fm.loads)
    if (load != 1) throw PreconditionError("extension leaves vertex " + std::to_string(v) + " with load " + to_string(load));
  return out;
}

bool has_perfect_fm(const Hypergraph& h) {
  if (h.k() == 0) return false;
  Rational target(static_cast<long>(h.vertices().size()), h.k());
  target.canonicalize();
  return fractional_matching_number(h).nu_star == target;
}

}  // namespace emc
