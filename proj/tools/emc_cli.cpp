// emc: command-line front end for the matching, LP, shifting, verification,
// inequality and sampling modules. Every subcommand prints one JSON report.

#include "emc/certificate.hpp"
#include "emc/combinatorics.hpp"
#include "emc/constructions.hpp"
#include "emc/fractional.hpp"
#include "emc/hypergraph.hpp"
#include "emc/inequality.hpp"
#include "emc/matching.hpp"
#include "emc/sampling.hpp"
#include "emc/shifting.hpp"
#include "emc/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace emc;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kMismatch = 1, kBudget = 2, kUsage = 3 };

std::string g_invocation;

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json header(const std::string& command, const json& seed = nullptr) {
  json r;
  r["tool"] = "emc";
  r["version"] = kVersion;
  r["command"] = command;
  r["invocation"] = g_invocation;
  r["seed"] = seed;
  r["timestamp"] = utc_timestamp();
  return r;
}

json jq(const Rational& q) { return to_string(q); }

json jz(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json jedges(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& e : edges) a.push_back(e);
  return a;
}

void emit(const json& r) { std::cout << r.dump(2) << "\n"; }

Rational rat(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

// "4..10", "9,10" or "7".
std::vector<int> int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      const auto dots = part.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int lo = std::stoi(part.substr(0, dots)), hi = std::stoi(part.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected an integer list like 4..10 or 9,10, got '" + text + "'");
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

// ---- report fragments -------------------------------------------------------

json matching_json(const FractionalMatching& fm) {
  json w = json::object(), l = json::object();
  for (const auto& [e, x] : fm.weights) w[edge_to_string(e)] = jq(x);
  for (const auto& [v, x] : fm.loads) l[std::to_string(v)] = jq(x);
  return {{"size", jq(fm.size)}, {"weights", w}, {"loads", l}};
}

json cover_json(const FractionalCover& fc) {
  json w = json::object();
  for (const auto& [v, x] : fc.weights) w[std::to_string(v)] = jq(x);
  return {{"size", jq(fc.size)}, {"weights", w}, {"support", fc.support}};
}

json profile_json(const ExtremalProfile& p) {
  json links = json::object();
  for (const auto& [a, size] : p.link_sizes) links[edge_to_string(a)] = jz(size);
  return {{"n", p.n},
          {"s", p.s},
          {"m", p.m},
          {"edges", jz(p.edges)},
          {"nu_star", jq(p.nu_star)},
          {"a", jq(p.a)},
          {"b", jq(p.b)},
          {"mu", jq(p.mu)},
          {"beta", jq(p.beta)},
          {"cover", cover_json(p.cover)},
          {"link_sizes", links},
          {"lhs_lowerbound", jz(p.lhs_lowerbound)},
          {"rhs_lowerbound", jq(p.rhs_lowerbound)},
          {"lowerbound_holds", p.lowerbound_holds},
          {"cover_sorted", p.cover_sorted},
          {"sorted_cover_feasible", p.sorted_cover_feasible},
          {"support_ok", p.support_ok}};
}

json bound_json(const BoundReport& b) {
  return {{"n", b.n},
          {"k", b.k},
          {"s", b.s},
          {"cover_term", jz(b.cover_term)},
          {"clique_term", jz(b.clique_term)},
          {"emc_bound", jz(b.emc_bound)},
          {"winner", to_string(b.winner)},
          {"in_range", b.in_range}};
}

json batch_json(const SampleBatch& b) {
  json j = {{"generator", sampling_generator_id},
            {"n_base", b.n_base},
            {"k", b.k},
            {"t", b.t},
            {"s", b.s},
            {"seed", b.seed},
            {"p_exponent", jq(b.p_exponent)},
            {"probability", b.probability}};
  const bool implicit = !b.ground.empty() && b.ground.front() == 1 &&
                        b.ground.back() == static_cast<int>(b.ground.size());
  if (implicit) j["ground_size"] = b.ground.size();
  else j["ground"] = b.ground;
  j["raw_sizes"] = b.raw_sizes;
  j["copies"] = b.copies;
  return j;
}

SampleBatch batch_from_json(const json& j) {
  SampleBatch b;
  b.n_base = j.at("n_base");
  b.k = j.at("k");
  b.t = j.at("t");
  b.s = j.at("s");
  b.seed = j.at("seed");
  b.probability = j.at("probability");
  if (j.contains("ground")) b.ground = j.at("ground").get<std::vector<Vertex>>();
  else
    for (int v = 1; v <= j.at("ground_size").get<int>(); ++v) b.ground.push_back(v);
  b.raw_sizes = j.at("raw_sizes").get<std::vector<std::size_t>>();
  b.copies = j.at("copies").get<std::vector<std::vector<Vertex>>>();
  for (const auto& r : b.copies) {
    CopyPartition part;
    for (Vertex v : r) {
      if (v <= b.t) part.t.push_back(v);
      else part.w.push_back(v);
      if (v > b.t && v <= b.t + b.s) part.v.push_back(v);
    }
    b.partitions.push_back(std::move(part));
  }
  return b;
}

json rounding_json(const RoundingReport& r) {
  json hist = json::object();
  for (const auto& [d, c] : r.degree_histogram) hist[std::to_string(d)] = c;
  return {{"candidates", r.candidates},
          {"kept", r.kept},
          {"degree_histogram", hist},
          {"max_codegree", r.max_codegree},
          {"degree_target", r.degree_target},
          {"codegree_target", r.codegree_target}};
}

json certificate_json(const Certificate& c) {
  json j = {{"target", c.target},
            {"mutation", c.mutation},
            {"status", to_string(c.status)},
            {"boxes", c.boxes},
            {"splits", c.splits},
            {"leaves", c.leaves.size()},
            {"max_depth", c.max_depth},
            {"max_boxes", c.max_boxes}};
  json params = json::object();
  for (const auto& [k, v] : c.params) params[k] = jq(v);
  j["params"] = params;
  if (c.status == CertStatus::counterexample) {
    json pt = json::object();
    for (const auto& [name, v] : c.counterexample_point) pt[name] = jq(v);
    j["counterexample"] = {{"region", c.counterexample_region}, {"point", pt}, {"margin", jq(c.counterexample_margin)}};
  }
  Rational min_margin;
  bool first = true;
  for (const auto& leaf : c.leaves)
    if (first || leaf.margin.lo < min_margin) {
      min_margin = leaf.margin.lo;
      first = false;
    }
  if (!first) j["min_leaf_margin_lo"] = jq(min_margin);
  return j;
}

int status_exit(CertStatus s) {
  switch (s) {
    case CertStatus::proved: return kOk;
    case CertStatus::counterexample: return kMismatch;
    case CertStatus::budget_exhausted: return kBudget;
  }
  return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_invocation += (i ? " " : "") + std::string(i == 0 ? "emc" : argv[i]);

  CLI::App app{"Exact tools for the Erdos matching conjecture and its stability analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  int rc = kOk;

  // gen
  std::string family, input, output, reference;
  int n = 0, k = 0, s = 0, idx = 1, u = 0, w = 0, p = 1;
  std::string eta_text = "1/100";
  auto* gen = app.add_subcommand("gen", "Write a construction as .khg");
  gen->add_option("--family", family, "hi | huw | hpuw | complete | construction1 | construction2")
      ->required()
      ->check(CLI::IsMember({"hi", "huw", "hpuw", "complete", "construction1", "construction2"}));
  gen->add_option("--n", n);
  gen->add_option("--k", k);
  gen->add_option("--s", s);
  gen->add_option("--i", idx, "index i of H_i");
  gen->add_option("--u", u, "|U| (U = [u])");
  gen->add_option("--w", w, "|W| (W follows U)");
  gen->add_option("--p", p);
  gen->add_option("--input", input, "base graph for the constructions");
  gen->add_option("--eta", eta_text);
  gen->add_option("--out", output, ".khg output path (stdout when omitted)");
  gen->callback([&] {
    Hypergraph h;
    int t = -1;
    if (family == "hi") h = build_Hi(n, k, s, idx);
    else if (family == "complete") h = complete_hypergraph(n, k);
    else if (family == "huw" || family == "hpuw") {
      std::vector<Vertex> uu = iota_vertices(1, u), ww = iota_vertices(u + 1, u + w);
      h = family == "huw" ? build_HUW(uu, ww, k) : build_HpUW(uu, ww, k, p);
    } else {
      if (input.empty()) throw CLI::ValidationError("--input", "required for " + family);
      const Hypergraph g = load_khg(input);
      Construction c = family == "construction1" ? construction1(g, s, rat(eta_text, "--eta")) : construction2(g, s);
      h = std::move(c.h);
      t = c.t;
    }
    if (output.empty()) {
      std::cout << to_khg(h);
      return;
    }
    save_khg(h, output);
    json r = header("gen");
    r["family"] = family;
    r["out"] = output;
    r["n"] = h.n();
    r["k"] = h.k();
    r["edges"] = h.size();
    if (t >= 0) r["t"] = t;
    emit(r);
  });

  // bound
  auto* bound = app.add_subcommand("bound", "EMC bound max{C(n,k)-C(n-s,k), C(sk+k-1,k)}");
  bound->add_option("--n", n)->required();
  bound->add_option("--k", k)->required();
  bound->add_option("--s", s)->required();
  bound->callback([&] {
    json r = header("bound");
    r["bound"] = bound_json(emc_bound(n, k, s));
    emit(r);
  });

  // nu / tau
  auto* nu = app.add_subcommand("nu", "Exact matching number");
  nu->add_option("--input", input)->required();
  nu->callback([&] {
    const Hypergraph h = load_khg(input);
    const MatchingResult m = matching_number(h);
    json r = header("nu");
    r["input"] = input;
    r["nu"] = m.nu;
    r["witness"] = jedges(m.witness.edges);
    r["nodes"] = m.nodes;
    emit(r);
  });
  auto* tau = app.add_subcommand("tau", "Exact vertex cover number");
  tau->add_option("--input", input)->required();
  tau->callback([&] {
    const Hypergraph h = load_khg(input);
    json r = header("tau");
    r["input"] = input;
    r["tau"] = cover_number(h);
    emit(r);
  });

  // nufrac
  bool dual = false, slackness = false, trace = false;
  auto* nufrac = app.add_subcommand("nufrac", "Fractional matching number by exact simplex");
  nufrac->add_option("--input", input)->required();
  nufrac->add_flag("--dual", dual, "also solve the cover program");
  nufrac->add_flag("--slackness", slackness, "check complementary slackness (implies --dual)");
  nufrac->add_flag("--trace", trace, "pivot log on stderr");
  nufrac->callback([&] {
    const Hypergraph h = load_khg(input);
    std::ostream* tr = trace ? &std::cerr : nullptr;
    const auto fm = fractional_matching_number(h, tr);
    json r = header("nufrac");
    r["input"] = input;
    r["nu_star"] = jq(fm.nu_star);
    r["matching"] = matching_json(fm.fm);
    if (dual || slackness) {
      const auto fc = fractional_cover_number(h, tr);
      r["tau_star"] = jq(fc.tau_star);
      r["cover"] = cover_json(fc.fc);
      r["duality_holds"] = fc.tau_star == fm.nu_star;
      if (fc.tau_star != fm.nu_star) rc = kMismatch;
      if (slackness) {
        const auto sr = check_complementary_slackness(fm.fm, fc.fc);
        r["slackness"] = {{"support_size", sr.support_size}, {"bound", jq(sr.bound)},
                          {"saturated_ok", sr.saturated_ok}, {"support_ok", sr.support_ok},
                          {"sizes_equal", sr.sizes_equal},   {"violations", sr.violations}};
        if (!sr.saturated_ok || !sr.support_ok || !sr.sizes_equal) rc = kMismatch;
      }
    }
    emit(r);
  });

  // shift
  bool log = false;
  auto* shift = app.add_subcommand("shift", "Stabilize by (i,j)-shifts");
  shift->add_option("--input", input)->required();
  shift->add_flag("--log", log, "list the effective shifts");
  shift->add_option("--out", output, ".khg output path");
  shift->callback([&] {
    const Hypergraph h = load_khg(input);
    const StabilizeResult sr = stabilize(h);
    json r = header("shift");
    r["input"] = input;
    r["edges_before"] = h.size();
    r["edges_after"] = sr.stable.size();
    r["stable"] = is_stable(sr.stable);
    r["shifts"] = sr.log.size();
    if (log) {
      json l = json::array();
      for (std::size_t i = 0; i < sr.log.size(); ++i)
        l.push_back({{"i", sr.log[i].first}, {"j", sr.log[i].second}, {"label_sum", sr.potential[i]}});
      r["log"] = l;
    }
    if (!output.empty()) {
      save_khg(sr.stable, output);
      r["out"] = output;
    } else {
      r["edges"] = jedges(sr.stable.edges());
    }
    emit(r);
  });

  // verify-emc
  std::string n_list, k_list, s_list;
  std::uint64_t budget = 100'000'000;
  int jobs = 1;
  bool timing = false;
  auto* vemc = app.add_subcommand("verify-emc", "Brute-force ex(n,k,s) against the EMC bound on a grid");
  vemc->add_option("--n", n_list, "values of n, e.g. 4..10")->required();
  vemc->add_option("--k", k_list, "values of k")->required();
  vemc->add_option("--s", s_list, "values of s (cells with n < k(s+1) are skipped)")->required();
  vemc->add_option("--budget", budget, "node budget per cell");
  auto* jobs_opt = vemc->add_option("--jobs", jobs, "worker threads (default 1, or $JOBS)");
  vemc->add_flag("--timing", timing, "include wall times (reports then differ between runs)");
  vemc->callback([&] {
    if (!jobs_opt->count())
      if (const char* env = std::getenv("JOBS")) jobs = std::max(1, std::atoi(env));
    struct Cell {
      int n, k, s;
    };
    std::vector<Cell> cells;
    for (int kk : int_list(k_list, "--k"))
      for (int nn : int_list(n_list, "--n"))
        for (int ss : int_list(s_list, "--s"))
          if (ss >= 1 && kk >= 1 && nn >= kk * (ss + 1)) cells.push_back({nn, kk, ss});
    std::vector<EmcReport> reports(cells.size());
    std::vector<std::string> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < cells.size();) {
        try {
          reports[i] = verify_emc(cells[i].n, cells[i].k, cells[i].s, budget);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < std::min<int>(jobs, static_cast<int>(cells.size())); ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    json r = header("verify-emc");
    r["budget"] = budget;
    json arr = json::array();
    bool all_match = true, all_exhausted = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!errors[i].empty()) throw std::invalid_argument(errors[i]);
      const EmcReport& e = reports[i];
      json c = {{"n", e.n},           {"k", e.k},           {"s", e.s},
                {"oracle", e.oracle}, {"formula", jz(e.formula.emc_bound)},
                {"winner", to_string(e.formula.winner)},    {"match", e.match},
                {"exhausted", e.exhausted},                 {"nodes", e.nodes}};
      if (timing) c["wall_time_ms"] = e.wall_time_ms;
      arr.push_back(c);
      all_match = all_match && e.match;
      all_exhausted = all_exhausted && e.exhausted;
    }
    r["cells"] = arr;
    r["all_match"] = all_match;
    r["all_exhausted"] = all_exhausted;
    emit(r);
    rc = !all_exhausted ? kBudget : all_match ? kOk : kMismatch;
  });

  // closeness
  std::string eps_text;
  auto* close = app.add_subcommand("closeness", "|E(H) - E(G)| against eps n^k");
  close->add_option("--input", input, "G")->required();
  close->add_option("--reference", reference, "H")->required();
  close->add_option("--eps", eps_text)->required();
  close->callback([&] {
    const auto rep = closeness(load_khg(input), load_khg(reference), rat(eps_text, "--eps"));
    json r = header("closeness");
    r["input"] = input;
    r["reference"] = reference;
    r["missing"] = jz(rep.missing_count);
    r["normalizer"] = jq(rep.normalizer);
    r["ratio"] = jq(rep.ratio);
    r["epsilon"] = jq(rep.epsilon);
    r["is_close"] = rep.is_close;
    emit(r);
  });

  // profile
  auto* profile = app.add_subcommand("profile", "Cover-derived quantities of a stable 4-graph");
  profile->add_option("--input", input)->required();
  profile->add_option("--s", s)->required();
  profile->add_option("--eps", eps_text)->required();
  profile->callback([&] {
    const auto pp = extremal_profiles(load_khg(input), s, rat(eps_text, "--eps"));
    json r = header("profile");
    r["input"] = input;
    r["raw"] = profile_json(pp.raw);
    r["saturated"] = profile_json(pp.saturated);
    emit(r);
  });

  // verify-ineq
  std::string target = "calculate", zmax_text = "1/100000", mutation = "none", a_text = "1/2";
  int depth = 60, points = 101, m = 30;
  std::uint64_t max_boxes = 10'000'000;
  auto* vineq = app.add_subcommand("verify-ineq", "Interval certification of the stability inequalities");
  vineq->add_option("--target", target)->check(CLI::IsMember({"calculate", "maxvalue", "convex"}));
  vineq->add_option("--zmax", zmax_text, "upper end of z = eps^(1/4)");
  vineq->add_option("--depth", depth);
  vineq->add_option("--max-boxes", max_boxes);
  vineq->add_option("--mutation", mutation, "none | negate-lead | flip-p | reverse | negate-c5-term");
  vineq->add_option("--out", output, "certificate path");
  vineq->add_option("--m", m, "convex: m");
  vineq->add_option("--k", k, "convex: k (default 4)");
  vineq->add_option("--s", s, "convex: s (default 5)");
  vineq->add_option("--a", a_text, "convex: a");
  vineq->add_option("--points", points, "convex: grid points");
  vineq->callback([&] {
    json r = header("verify-ineq");
    r["target"] = target;
    if (target == "convex") {
      const ConvexInstance in{m, k ? k : 4, s ? s : 5, rat(a_text, "--a")};
      const auto rep = check_convexity([&](const Rational& x) { return eval_convex_branches(x, in).f; }, 0,
                                       (1 + in.a) / 2, points, &in);
      r["instance"] = {{"m", in.m}, {"k", in.k}, {"s", in.s}, {"a", jq(in.a)}};
      r["interval"] = {jq(rep.lo), jq(rep.hi)};
      r["grid_points"] = rep.grid_points;
      r["min_second_difference"] = jq(rep.min_second_difference);
      r["argmin"] = jq(rep.argmin);
      r["convex"] = rep.convex;
      r["max_hj"] = jq(rep.max_hj);
      r["max_hj_index"] = rep.max_hj_index;
      r["max_hj_at"] = jq(rep.max_hj_at);
      r["hj_nonpositive"] = rep.hj_nonpositive;
      emit(r);
      rc = rep.convex && rep.hj_nonpositive ? kOk : kMismatch;
      return;
    }
    Certificate cert = target == "calculate"
                           ? certify_calculate_lemma(rat(zmax_text, "--zmax"), depth, max_boxes,
                                                     parse_calculate_mutation(mutation))
                           : certify_maxvalue_coeffs(depth, max_boxes, parse_maxvalue_mutation(mutation));
    if (!output.empty()) {
      std::ofstream f(output);
      if (!f) throw std::runtime_error("cannot write " + output);
      write_certificate(f, cert);
      r["out"] = output;
    }
    r["certificate"] = certificate_json(cert);
    emit(r);
    rc = status_exit(cert.status);
  });

  // verify-cert
  auto* vcert = app.add_subcommand("verify-cert", "Replay a certificate by exact evaluation");
  vcert->add_option("--input", input)->required();
  vcert->callback([&] {
    std::ifstream f(input);
    if (!f) throw std::runtime_error("cannot read " + input);
    const Certificate cert = read_certificate(f);
    const ReplayReport rep = replay_certificate(cert);
    json r = header("verify-cert");
    r["input"] = input;
    r["target"] = cert.target;
    r["mutation"] = cert.mutation;
    r["status"] = to_string(cert.status);
    r["replay_ok"] = rep.ok;
    r["proves"] = rep.proves;
    r["leaves_checked"] = rep.leaves_checked;
    if (!rep.ok) r["failure"] = rep.failure;
    emit(r);
    rc = rep.ok ? status_exit(cert.status) : kMismatch;
  });

  // sample / round / greedy
  int t = 0, copies = 100;
  std::uint64_t seed = 1;
  std::string batch_path;
  bool complete = false;
  auto* sample = app.add_subcommand("sample", "Sample vertex subsets R^i at rate n^(-9/10)");
  sample->add_option("--input", input, "hypergraph on n + t vertices");
  sample->add_option("--n", n, "implicit ground set [n + t] when no --input");
  sample->add_option("--k", k, "uniformity for the implicit ground set");
  sample->add_option("--t", t);
  sample->add_option("--s", s);
  sample->add_option("--copies", copies);
  sample->add_option("--seed", seed);
  sample->add_option("--out", output, "batch JSON path");
  sample->callback([&] {
    std::optional<Hypergraph> h;
    SampleBatch b;
    if (!input.empty()) {
      h = load_khg(input);
      b = sample_batch(*h, t, copies, seed, s);
    } else {
      if (n < 1 || k < 1) throw CLI::ValidationError("--n/--k", "needed without --input");
      b = sample_batch(n, k, t, s, copies, seed);
    }
    const IncidenceSummary sum = summarize_incidence(b, h ? &*h : nullptr);
    json r = header("sample", seed);
    r["summary"] = {{"copies", b.copies.size()},
                    {"probability", b.probability},
                    {"mean_raw_size", sum.mean_raw_size},
                    {"expected_raw_size", sum.expected_raw_size},
                    {"mean_singleton", sum.mean_singleton},
                    {"expected_singleton", sum.expected_singleton},
                    {"min_singleton", sum.min_singleton},
                    {"max_singleton", sum.max_singleton},
                    {"pairs_y_ge_3", sum.pairs_y_ge_3},
                    {"edges_y_ge_2", h ? json(sum.edges_y_ge_2) : json(nullptr)}};
    if (!output.empty()) {
      write_text(output, batch_json(b).dump() + "\n");
      r["out"] = output;
    } else {
      r["batch"] = batch_json(b);
    }
    emit(r);
  });

  auto* round = app.add_subcommand("round", "Randomized rounding of per-copy perfect fractional matchings");
  round->add_option("--input", input, "hypergraph the batch was drawn from");
  round->add_option("--batch", batch_path)->required();
  round->add_flag("--complete", complete, "treat the host as the complete k-graph (no --input)");
  round->add_option("--seed", seed);
  round->add_option("--out", output, ".khg output path for H''");
  round->callback([&] {
    std::ifstream f(batch_path);
    if (!f) throw std::runtime_error("cannot read " + batch_path);
    const SampleBatch b = batch_from_json(json::parse(f));
    RoundingReport rep;
    json r = header("round", seed);
    if (complete) {
      rep = round_complete(b, seed);
    } else {
      if (input.empty()) throw CLI::ValidationError("--input", "required unless --complete");
      const Hypergraph h = load_khg(input);
      std::vector<FractionalMatching> pfms;
      for (std::size_t i = 0; i < b.copies.size(); ++i) {
        const Hypergraph sub = induced(h, b.copies[i]);
        const auto fm = fractional_matching_number(sub);
        if (fm.nu_star * h.k() != static_cast<long>(b.copies[i].size())) {
          r["error"] = "copy " + std::to_string(i) + " has no perfect fractional matching";
          r["copy"] = i;
          emit(r);
          rc = kMismatch;
          return;
        }
        pfms.push_back(fm.fm);
      }
      rep = round_to_sparse(h, b, pfms, seed);
    }
    r["rounding"] = rounding_json(rep);
    if (!output.empty()) {
      save_khg(rep.sparse, output);
      r["out"] = output;
    }
    emit(r);
  });

  auto* greedy = app.add_subcommand("greedy", "Greedy maximal matching in lexicographic order");
  greedy->add_option("--input", input)->required();
  greedy->add_option("--seed", seed, "echoed only; the scan is deterministic");
  greedy->callback([&] {
    const GreedyMatching g = greedy_near_perfect_matching(load_khg(input));
    json r = header("greedy", seed);
    r["input"] = input;
    r["size"] = g.matching.size;
    r["uncovered"] = g.uncovered;
    r["edges"] = jedges(g.matching.edges);
    emit(r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
