#include "emc/certificate.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace emc {

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::proved: return "proved";
    case CertStatus::counterexample: return "counterexample";
    case CertStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

const char* to_string(CalculateMutation m) {
  switch (m) {
    case CalculateMutation::none: return "none";
    case CalculateMutation::negate_lead: return "negate-lead";
    case CalculateMutation::flip_p: return "flip-p";
    case CalculateMutation::reverse: return "reverse";
  }
  return "?";
}

const char* to_string(MaxvalueMutation m) {
  switch (m) {
    case MaxvalueMutation::none: return "none";
    case MaxvalueMutation::negate_c5_term: return "negate-c5-term";
  }
  return "?";
}

CalculateMutation parse_calculate_mutation(const std::string& s) {
  for (auto m : {CalculateMutation::none, CalculateMutation::negate_lead, CalculateMutation::flip_p,
                 CalculateMutation::reverse})
    if (s == to_string(m)) return m;
  throw std::invalid_argument("unknown calculate mutation: " + s);
}

MaxvalueMutation parse_maxvalue_mutation(const std::string& s) {
  for (auto m : {MaxvalueMutation::none, MaxvalueMutation::negate_c5_term})
    if (s == to_string(m)) return m;
  throw std::invalid_argument("unknown maxvalue mutation: " + s);
}

namespace {

const Rational& c_const() {
  static const Rational c = 4 - stability_delta();
  return c;
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

// ---- calculate: margin after y = mu x and division by x^3 ----------------

// Regions: P1 (x <= 5/8), P2 (5/8 < x <= 2/3), P3 (2/3 < x <= 3/4). In P2 and
// P3 the max{} of h splits into branch 1 (27 - (3-mu)^3) and branch 2 (27 mu^3).
enum class Piece { p1, p2, p3 };

struct CalcRegion {
  Piece piece;
  int branch;  // 0 in P1; 1 or 2 otherwise
};

CalcRegion parse_calc_region(const std::string& r) {
  if (r == "P1") return {Piece::p1, 0};
  if (r == "P2:max1") return {Piece::p2, 1};
  if (r == "P2:max2") return {Piece::p2, 2};
  if (r == "P3:max1") return {Piece::p3, 1};
  if (r == "P3:max2") return {Piece::p3, 2};
  throw std::invalid_argument("unknown calculate region: " + r);
}

template <class T>
T clique_branch(int branch, const T& mu) {
  if (branch == 1) return T(27) - power(T(T(3) - mu), 3);
  return T(27) * power(mu, 3);
}

// branch 0 in P2/P3 means the max of both branches (exact evaluation only).
template <class T>
T calc_margin(Piece piece, int branch, CalculateMutation mut, const T& x, const T& mu, const T& z) {
  const Rational& d = stability_delta();
  const Rational& c = c_const();
  const Rational c3 = power(c, 3);
  T lead = T(1 - d) * power(T(T(c) - mu), 3);
  if (mut == CalculateMutation::negate_lead) lead = -lead;
  const T factor = x * (T(c) - T(3) * mu);
  T h, p;
  if (piece == Piece::p1) {
    h = T(c3) - power(T(T(c) - mu), 3);
    p = T(52 * c3) * power(z, 3);
  } else {
    if (branch == 0) {
      if constexpr (std::is_same_v<T, Rational>)
        h = std::max(clique_branch(1, mu), clique_branch(2, mu));
      else
        h = max(clique_branch(1, mu), clique_branch(2, mu));
    } else {
      h = clique_branch(branch, mu);
    }
    if (piece == Piece::p2) h = h + T(3 * (1 - d) * c) * mu * mu;
    p = T(c3 / 8100);
  }
  if (mut == CalculateMutation::flip_p) p = -p;
  T m = lead - factor * (h + p);
  if (mut == CalculateMutation::reverse) m = -m;
  return m;
}

bool calc_point_in_region(Piece piece, const Rational& x, const Rational& mu, const Rational& z, const Rational& z_max) {
  if (z <= 0 || z > z_max) return false;
  if (mu <= 0 || mu > 1) return false;
  const Rational y = mu * x;
  if (!(5 * z < y)) return false;
  switch (piece) {
    case Piece::p1: return x > 0 && x <= q(5, 8);
    case Piece::p2: return x > q(5, 8) && x <= q(2, 3);
    case Piece::p3: return x > q(2, 3) && x <= q(3, 4);
  }
  return false;
}

// ---- maxvalue: C_i(alpha) with beta = x(c - 3 mu) --------------------------

template <class T>
T c_coeff(int i, const T& alpha, const T& mu, const T& x, MaxvalueMutation mut) {
  const Rational& d = stability_delta();
  const T beta = x * (T(c_const()) - T(3) * mu);
  const T a2 = alpha * alpha;
  const T mu2 = mu * mu;
  const T od(1 - d);
  switch (i) {
    case 1: return (beta + od) * (T(6) * mu2 * a2 - T(9) * mu * alpha + T(3));
    case 2:
      return T(6) * (T(27) * beta - T(45) * beta * mu + (beta + od) * mu2) * a2 +
             T(9) * (T(4) * beta - od) * mu * alpha + T(3) * od;
    case 3:
      return T(6) * (T(-36) * beta * mu + (T(27) * beta + od) * mu2) * a2 + T(9) * (T(4) * beta - od) * mu * alpha +
             T(3) * od;
    case 4:
      return T(6) * (T(27) * beta - T(9) * beta * mu + (beta + od) * mu2) * a2 - T(9) * od * mu * alpha + T(3) * od;
    case 5: {
      T v = T(6) * (T(27) * beta + od) * mu2 * a2 - T(9) * od * mu * alpha + T(3) * od;
      if (mut == MaxvalueMutation::negate_c5_term) v = v - T(324) * beta * mu2 * a2;
      return v;
    }
    default: throw std::invalid_argument("C_i needs 1 <= i <= 5");
  }
}

int parse_c_region(const std::string& r) {
  if (r.size() == 2 && r[0] == 'C' && r[1] >= '1' && r[1] <= '5') return r[1] - '0';
  throw std::invalid_argument("unknown maxvalue region: " + r);
}

bool maxvalue_point_in_region(int i, const Rational& alpha, const Rational& x, const Rational& mu) {
  if (alpha < 0 || alpha * c_const() > 1) return false;
  if (mu <= 0 || mu > 1) return false;
  if (i == 2 || i == 3) return x > q(5, 8) && x <= q(2, 3);
  return x > 0 && x <= q(3, 4);
}

// ---- shared driver ---------------------------------------------------------

struct SubTarget {
  std::string region;
  Box root;
};

Box make_box(const std::vector<std::string>& names, std::vector<Interval> coords, const std::string& tag) {
  Box b;
  b.names = names;
  b.coords = std::move(coords);
  b.region_tag = tag;
  return b;
}

std::vector<SubTarget> sub_targets(const std::string& target, const std::map<std::string, Rational>& params) {
  std::vector<SubTarget> out;
  if (target == "calculate") {
    auto it = params.find("zmax");
    if (it == params.end()) throw std::invalid_argument("calculate certificate needs param zmax");
    const Interval z(0, it->second);
    const std::vector<std::string> names = {"x", "mu", "z"};
    const Interval mu(0, 1);
    out.push_back({"P1", make_box(names, {Interval(0, q(5, 8)), mu, z}, "P1")});
    for (const char* r : {"P2:max1", "P2:max2"}) out.push_back({r, make_box(names, {Interval(q(5, 8), q(2, 3)), mu, z}, r)});
    for (const char* r : {"P3:max1", "P3:max2"}) out.push_back({r, make_box(names, {Interval(q(2, 3), q(3, 4)), mu, z}, r)});
  } else if (target == "maxvalue") {
    const std::vector<std::string> names = {"alpha", "x", "mu"};
    const Interval alpha(0, 1 / c_const());
    for (int i = 1; i <= 5; ++i) {
      const Interval x = (i == 2 || i == 3) ? Interval(q(5, 8), q(2, 3)) : Interval(0, q(3, 4));
      const std::string r = "C" + std::to_string(i);
      out.push_back({r, make_box(names, {alpha, x, Interval(0, 1)}, r)});
    }
  } else {
    throw std::invalid_argument("unknown certificate target: " + target);
  }
  return out;
}

Interval interval_margin(const std::string& target, const std::string& mutation, const std::string& region,
                         const Box& box) {
  if (target == "calculate") {
    const CalcRegion r = parse_calc_region(region);
    return calc_margin<Interval>(r.piece, r.branch, parse_calculate_mutation(mutation), box.coords[0], box.coords[1],
                                 box.coords[2]);
  }
  return c_coeff<Interval>(parse_c_region(region), box.coords[0], box.coords[1], box.coords[2],
                           parse_maxvalue_mutation(mutation));
}

// Exact margin of the unsplit inequality (max{} restored) and region test.
struct PointCheck {
  bool in_region = false;
  Rational margin;
};

PointCheck check_point(const std::string& target, const std::string& mutation, const std::string& region,
                       const std::vector<Rational>& p, const std::map<std::string, Rational>& params) {
  PointCheck out;
  if (target == "calculate") {
    const CalcRegion r = parse_calc_region(region);
    out.margin = calc_margin<Rational>(r.piece, 0, parse_calculate_mutation(mutation), p[0], p[1], p[2]);
    out.in_region = calc_point_in_region(r.piece, p[0], p[1], p[2], params.at("zmax"));
  } else {
    const int i = parse_c_region(region);
    out.margin = c_coeff<Rational>(i, p[0], p[1], p[2], parse_maxvalue_mutation(mutation));
    out.in_region = maxvalue_point_in_region(i, p[0], p[1], p[2]);
  }
  return out;
}

bool leaf_less(const CertLeaf& a, const CertLeaf& b) {
  if (a.region != b.region) return a.region < b.region;
  for (std::size_t i = 0; i < a.box.coords.size(); ++i) {
    if (a.box.coords[i].lo != b.box.coords[i].lo) return a.box.coords[i].lo < b.box.coords[i].lo;
    if (a.box.coords[i].hi != b.box.coords[i].hi) return a.box.coords[i].hi < b.box.coords[i].hi;
  }
  return false;
}

Certificate run_certifier(Certificate cert) {
  struct Item {
    Box box;
    int depth;
  };
  for (const SubTarget& st : sub_targets(cert.target, cert.params)) {
    // Breadth first, so a violated region is found at the shallowest level
    // instead of after a dive along the zero set of the margin.
    std::deque<Item> queue;
    queue.push_back({st.root, 0});
    while (!queue.empty()) {
      Item item = std::move(queue.front());
      queue.pop_front();
      if (cert.boxes >= cert.max_boxes) {
        cert.status = CertStatus::budget_exhausted;
        std::sort(cert.leaves.begin(), cert.leaves.end(), leaf_less);
        return cert;
      }
      ++cert.boxes;
      const Interval m = interval_margin(cert.target, cert.mutation, st.region, item.box);
      if (m.positive()) {
        cert.leaves.push_back({st.region, item.box, m});
        continue;
      }
      const std::vector<Rational> center = item.box.center();
      const PointCheck pc = check_point(cert.target, cert.mutation, st.region, center, cert.params);
      if (pc.in_region && pc.margin <= 0) {
        cert.status = CertStatus::counterexample;
        cert.counterexample_region = st.region;
        for (std::size_t i = 0; i < center.size(); ++i)
          cert.counterexample_point.emplace_back(item.box.names[i], center[i]);
        cert.counterexample_margin = pc.margin;
        std::sort(cert.leaves.begin(), cert.leaves.end(), leaf_less);
        return cert;
      }
      if (item.depth >= cert.max_depth) {
        cert.status = CertStatus::budget_exhausted;
        std::sort(cert.leaves.begin(), cert.leaves.end(), leaf_less);
        return cert;
      }
      auto [left, right] = item.box.bisect(item.box.widest());
      ++cert.splits;
      queue.push_back({std::move(left), item.depth + 1});
      queue.push_back({std::move(right), item.depth + 1});
    }
  }
  cert.status = CertStatus::proved;
  std::sort(cert.leaves.begin(), cert.leaves.end(), leaf_less);
  return cert;
}

}  // namespace

Certificate certify_calculate_lemma(const Rational& z_max, int max_depth, std::uint64_t max_boxes,
                                    CalculateMutation mutation) {
  if (z_max <= 0 || z_max > ten_to_minus(5)) throw std::invalid_argument("z_max must lie in (0, 10^-5]");
  Certificate cert;
  cert.target = "calculate";
  cert.mutation = to_string(mutation);
  cert.params["delta"] = stability_delta();
  cert.params["zmax"] = z_max;
  cert.max_depth = max_depth;
  cert.max_boxes = max_boxes;
  return run_certifier(std::move(cert));
}

Certificate certify_maxvalue_coeffs(int max_depth, std::uint64_t max_boxes, MaxvalueMutation mutation) {
  Certificate cert;
  cert.target = "maxvalue";
  cert.mutation = to_string(mutation);
  cert.params["delta"] = stability_delta();
  cert.max_depth = max_depth;
  cert.max_boxes = max_boxes;
  return run_certifier(std::move(cert));
}

Rational certificate_margin(const std::string& target, const std::string& mutation, const std::string& region,
                           const std::vector<Rational>& point) {
  if (point.size() != 3) throw std::invalid_argument("certificate points have three coordinates");
  if (target == "calculate") {
    const CalcRegion r = parse_calc_region(region);
    return calc_margin<Rational>(r.piece, r.branch, parse_calculate_mutation(mutation), point[0], point[1], point[2]);
  }
  if (target == "maxvalue")
    return c_coeff<Rational>(parse_c_region(region), point[0], point[1], point[2], parse_maxvalue_mutation(mutation));
  throw std::invalid_argument("unknown certificate target: " + target);
}

// ---- serialization ---------------------------------------------------------

void write_certificate(std::ostream& out, const Certificate& cert) {
  out << "emc-certificate 1\n";
  out << "target " << cert.target << "\n";
  out << "mutation " << cert.mutation << "\n";
  for (const auto& [k, v] : cert.params) out << "param " << k << " " << to_string(v) << "\n";
  out << "max_depth " << cert.max_depth << "\n";
  out << "max_boxes " << cert.max_boxes << "\n";
  out << "status " << to_string(cert.status) << "\n";
  out << "boxes " << cert.boxes << "\n";
  out << "splits " << cert.splits << "\n";
  if (cert.status == CertStatus::counterexample) {
    out << "counterexample " << cert.counterexample_region;
    for (const auto& [name, v] : cert.counterexample_point) out << " " << name << " " << to_string(v);
    out << " margin " << to_string(cert.counterexample_margin) << "\n";
  }
  out << "leaves " << cert.leaves.size() << "\n";
  for (const CertLeaf& leaf : cert.leaves) {
    out << "leaf " << leaf.region;
    for (std::size_t i = 0; i < leaf.box.coords.size(); ++i)
      out << " " << leaf.box.names[i] << " " << to_string(leaf.box.coords[i].lo) << " "
          << to_string(leaf.box.coords[i].hi);
    out << " margin " << to_string(leaf.margin.lo) << " " << to_string(leaf.margin.hi) << "\n";
  }
  out << "end\n";
}

namespace {

CertStatus parse_status(const std::string& s) {
  for (auto st : {CertStatus::proved, CertStatus::counterexample, CertStatus::budget_exhausted})
    if (s == to_string(st)) return st;
  throw std::invalid_argument("unknown certificate status: " + s);
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Certificate read_certificate(std::istream& in) {
  Certificate cert;
  std::string line;
  std::size_t line_no = 0;
  bool header = false, ended = false;
  std::size_t declared_leaves = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!header) {
      std::string version;
      ls >> version;
      if (key != "emc-certificate" || version != "1") bad_line(line_no, "expected 'emc-certificate 1'");
      header = true;
      continue;
    }
    if (key == "target") {
      ls >> cert.target;
    } else if (key == "mutation") {
      ls >> cert.mutation;
    } else if (key == "param") {
      std::string name, value;
      ls >> name >> value;
      cert.params[name] = parse_rational(value);
    } else if (key == "max_depth") {
      ls >> cert.max_depth;
    } else if (key == "max_boxes") {
      ls >> cert.max_boxes;
    } else if (key == "status") {
      std::string s;
      ls >> s;
      cert.status = parse_status(s);
    } else if (key == "boxes") {
      ls >> cert.boxes;
    } else if (key == "splits") {
      ls >> cert.splits;
    } else if (key == "counterexample") {
      ls >> cert.counterexample_region;
      std::string name, value;
      while (ls >> name >> value) {
        if (name == "margin") cert.counterexample_margin = parse_rational(value);
        else cert.counterexample_point.emplace_back(name, parse_rational(value));
      }
    } else if (key == "leaves") {
      ls >> declared_leaves;
    } else if (key == "leaf") {
      CertLeaf leaf;
      ls >> leaf.region;
      leaf.box.region_tag = leaf.region;
      std::string name, lo, hi;
      bool have_margin = false;
      while (ls >> name >> lo >> hi) {
        const Interval iv(parse_rational(lo), parse_rational(hi));
        if (name == "margin") {
          leaf.margin = iv;
          have_margin = true;
        } else {
          leaf.box.names.push_back(name);
          leaf.box.coords.push_back(iv);
        }
      }
      if (!have_margin) bad_line(line_no, "leaf without margin");
      cert.leaves.push_back(std::move(leaf));
    } else if (key == "end") {
      ended = true;
      break;
    } else {
      bad_line(line_no, "unknown key '" + key + "'");
    }
    if (ls.fail() && !ls.eof()) bad_line(line_no, "malformed value");
  }
  if (!header) throw std::invalid_argument("empty certificate");
  if (!ended) throw std::invalid_argument("certificate truncated (no 'end' line)");
  if (declared_leaves != cert.leaves.size()) throw std::invalid_argument("certificate leaf count mismatch");
  return cert;
}

// ---- replay ----------------------------------------------------------------

namespace {

struct Replayer {
  const Certificate& cert;
  ReplayReport report;

  bool fail(const std::string& why) {
    if (report.failure.empty()) report.failure = why;
    return false;
  }

  bool check_leaf(const CertLeaf& leaf) {
    const Interval m = interval_margin(cert.target, cert.mutation, leaf.region, leaf.box);
    ++report.leaves_checked;
    if (!(m == leaf.margin)) return fail("stored margin differs from recomputed margin in " + leaf.region);
    if (!m.positive()) return fail("leaf margin not positive in " + leaf.region);
    return true;
  }

  // `leaves` are the certificate's leaves inside `box`; they must tile it.
  bool tile(const Box& box, std::vector<const CertLeaf*> leaves, int depth) {
    if (leaves.empty()) return fail("uncovered box in " + box.region_tag);
    if (leaves.size() == 1 && leaves[0]->box.coords == box.coords) return check_leaf(*leaves[0]);
    if (depth >= cert.max_depth) return fail("leaves do not follow the bisection rule in " + box.region_tag);
    const std::size_t w = box.widest();
    auto [left, right] = box.bisect(w);
    std::vector<const CertLeaf*> l, r;
    for (const CertLeaf* leaf : leaves) {
      bool in_left = true, in_right = true;
      for (std::size_t i = 0; i < box.coords.size(); ++i) {
        in_left = in_left && left.coords[i].contains(leaf->box.coords[i]);
        in_right = in_right && right.coords[i].contains(leaf->box.coords[i]);
      }
      if (in_left) l.push_back(leaf);
      else if (in_right) r.push_back(leaf);
      else return fail("leaf straddles a bisection in " + box.region_tag);
    }
    return tile(left, std::move(l), depth + 1) && tile(right, std::move(r), depth + 1);
  }
};

}  // namespace

ReplayReport replay_certificate(const Certificate& cert) {
  Replayer rp{cert, {}};
  std::vector<SubTarget> targets;
  try {
    targets = sub_targets(cert.target, cert.params);
    if (cert.target == "calculate") parse_calculate_mutation(cert.mutation);
    else parse_maxvalue_mutation(cert.mutation);
  } catch (const std::exception& e) {
    rp.fail(e.what());
    return rp.report;
  }

  if (cert.status == CertStatus::counterexample) {
    std::vector<Rational> point;
    for (const auto& [name, v] : cert.counterexample_point) point.push_back(v);
    if (point.size() != 3) {
      rp.fail("counterexample point needs three coordinates");
      return rp.report;
    }
    const PointCheck pc = check_point(cert.target, cert.mutation, cert.counterexample_region, point, cert.params);
    if (!pc.in_region) rp.fail("counterexample point outside the region");
    else if (pc.margin > 0) rp.fail("counterexample point satisfies the inequality");
    else if (pc.margin != cert.counterexample_margin) rp.fail("counterexample margin differs");
  }

  if (cert.status == CertStatus::proved) {
    for (const SubTarget& st : targets) {
      std::vector<const CertLeaf*> mine;
      for (const CertLeaf& leaf : cert.leaves)
        if (leaf.region == st.region) mine.push_back(&leaf);
      if (!rp.tile(st.root, std::move(mine), 0)) return rp.report;
    }
    if (rp.report.leaves_checked != cert.leaves.size()) {
      rp.fail("certificate has leaves outside every sub-target");
      return rp.report;
    }
  } else {
    for (const CertLeaf& leaf : cert.leaves)
      if (!rp.check_leaf(leaf)) return rp.report;
  }
  rp.report.ok = rp.report.failure.empty();
  rp.report.proves = rp.report.ok && cert.status == CertStatus::proved;
  return rp.report;
}

}  // namespace emc
