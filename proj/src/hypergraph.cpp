#include "emc/hypergraph.hpp"

#include "emc/combinatorics.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace emc {

std::string edge_to_string(std::span<const Vertex> e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + "}";
}

namespace {

std::vector<Edge> canonicalize(int n, int k, const std::vector<Vertex>& ground, std::vector<Edge> raw) {
  for (auto& e : raw) {
    const std::string where = " in edge " + edge_to_string(e);
    if (static_cast<int>(e.size()) != k)
      throw std::invalid_argument("edge has " + std::to_string(e.size()) + " vertices, expected " +
                                  std::to_string(k) + where);
    for (Vertex v : e) {
      if (v < 1 || v > n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]" +
                                    where);
      if (!std::binary_search(ground.begin(), ground.end(), v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside the ground set" + where);
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("repeated vertex" + where);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return raw;
}

}  // namespace

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> raw_edges) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (k < 1 || k > n) throw std::invalid_argument("uniformity must satisfy 1 <= k <= n");
  n_ = n;
  k_ = k;
  ground_ = iota_vertices(1, n);
  edges_ = canonicalize(n, k, ground_, std::move(raw_edges));
}

Hypergraph Hypergraph::with_ground_set(int n, int k, std::vector<Vertex> ground, std::vector<Edge> raw_edges) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (k < 0) throw std::invalid_argument("uniformity must be nonnegative");
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  for (Vertex v : ground)
    if (v < 1 || v > n)
      throw std::invalid_argument("ground vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
  Hypergraph h;
  h.n_ = n;
  h.k_ = k;
  h.ground_ = std::move(ground);
  h.edges_ = canonicalize(n, k, h.ground_, std::move(raw_edges));
  return h;
}

bool Hypergraph::contains(std::span<const Vertex> edge) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge,
                             [](const Edge& a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                             });
  return it != edges_.end() && std::equal(it->begin(), it->end(), edge.begin(), edge.end());
}

std::size_t Hypergraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto& e : edges_)
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  return d;
}

Hypergraph complete_hypergraph(int n, int k) {
  std::vector<Edge> edges;
  auto ground = iota_vertices(1, n);
  for_each_subset(ground, k, [&](std::span<const int> s) {
    edges.emplace_back(s.begin(), s.end());
    return true;
  });
  return Hypergraph(n, k, std::move(edges));
}

bool is_stable(const Hypergraph& h) {
  Edge probe;
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Vertex lower = (i == 0) ? 0 : e[i - 1];
      if (e[i] - 1 <= lower) continue;
      probe = e;
      probe[i] -= 1;
      if (!h.contains(probe)) return false;
    }
  }
  return true;
}

Hypergraph shadow(const Hypergraph& f) {
  if (f.k() < 2) throw std::invalid_argument("shadow requires k >= 2");
  std::vector<Edge> out;
  for (const auto& e : f.edges()) {
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      Edge sub;
      sub.reserve(e.size() - 1);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) sub.push_back(e[i]);
      out.push_back(std::move(sub));
    }
  }
  return Hypergraph::with_ground_set(f.n(), f.k() - 1, f.vertices(), std::move(out));
}

Hypergraph trace_family(const Hypergraph& h, std::span<const Vertex> a, std::span<const Vertex> s) {
  std::vector<Vertex> a_sorted(a.begin(), a.end()), s_sorted(s.begin(), s.end());
  std::sort(a_sorted.begin(), a_sorted.end());
  std::sort(s_sorted.begin(), s_sorted.end());
  if (!std::includes(s_sorted.begin(), s_sorted.end(), a_sorted.begin(), a_sorted.end()))
    throw std::invalid_argument("trace_family requires A to be a subset of S");
  if (static_cast<int>(a_sorted.size()) > h.k()) throw std::invalid_argument("trace_family requires |A| <= k");

  std::vector<Vertex> ground;
  std::set_difference(h.vertices().begin(), h.vertices().end(), s_sorted.begin(), s_sorted.end(),
                      std::back_inserter(ground));
  std::vector<Edge> out;
  Edge meet;
  for (const auto& e : h.edges()) {
    meet.clear();
    std::set_intersection(e.begin(), e.end(), s_sorted.begin(), s_sorted.end(), std::back_inserter(meet));
    if (meet != a_sorted) continue;
    Edge rest;
    std::set_difference(e.begin(), e.end(), a_sorted.begin(), a_sorted.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return Hypergraph::with_ground_set(h.n(), h.k() - static_cast<int>(a_sorted.size()), std::move(ground),
                                     std::move(out));
}

Hypergraph induced(const Hypergraph& h, std::span<const Vertex> w) {
  std::vector<Vertex> ground(w.begin(), w.end());
  std::sort(ground.begin(), ground.end());
  std::vector<Edge> out;
  for (const auto& e : h.edges())
    if (std::includes(ground.begin(), ground.end(), e.begin(), e.end())) out.push_back(e);
  return Hypergraph::with_ground_set(h.n(), h.k(), std::move(ground), std::move(out));
}

ClosenessReport closeness(const Hypergraph& g, const Hypergraph& h, const Rational& epsilon) {
  if (g.n() != h.n() || g.k() != h.k())
    throw std::invalid_argument("closeness requires equal n and k");
  ClosenessReport r;
  std::size_t missing = 0;
  for (const auto& e : h.edges())
    if (!g.contains(e)) ++missing;
  r.missing_count = static_cast<unsigned long>(missing);
  r.normalizer = power(Rational(h.n()), h.k());
  r.ratio = Rational(r.missing_count) / r.normalizer;
  r.epsilon = epsilon;
  r.is_close = Rational(r.missing_count) < epsilon * r.normalizer;
  return r;
}

MinDegree min_d_degree(const Hypergraph& h, int d) {
  if (d < 1 || d > h.k() - 1) throw std::invalid_argument("min_d_degree requires 1 <= d <= k-1");
  const auto& ground = h.vertices();
  std::unordered_map<Vertex, long> position;
  for (std::size_t i = 0; i < ground.size(); ++i) position[ground[i]] = static_cast<long>(i);

  // Key a d-subset by its positions in mixed radix |V|.
  const long base = static_cast<long>(ground.size());
  auto key_of = [&](std::span<const int> subset) {
    long key = 0;
    for (int v : subset) key = key * base + position.at(v);
    return key;
  };
  std::unordered_map<long, long> counts;
  for (const auto& e : h.edges()) {
    for_each_subset(e, d, [&](std::span<const int> sub) {
      ++counts[key_of(sub)];
      return true;
    });
  }
  MinDegree best;
  bool have = false;
  long best_value = 0;
  for_each_subset(ground, d, [&](std::span<const int> sub) {
    auto it = counts.find(key_of(sub));
    long c = it == counts.end() ? 0 : it->second;
    if (!have || c < best_value) {
      have = true;
      best_value = c;
      best.witness.assign(sub.begin(), sub.end());
      if (c == 0) return false;
    }
    return true;
  });
  best.value = best_value;
  return best;
}

Hypergraph read_khg(std::istream& in) {
  std::string line;
  bool have_header = false;
  int n = 0, k = 0;
  long m = 0;
  std::vector<Edge> edges;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> n >> k >> m) || m < 0)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected header 'n k m'");
      have_header = true;
      continue;
    }
    Edge e;
    long v;
    while (ls >> v) e.push_back(static_cast<Vertex>(v));
    if (!ls.eof()) throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed edge");
    edges.push_back(std::move(e));
  }
  if (!have_header) throw std::invalid_argument("missing 'n k m' header");
  if (static_cast<long>(edges.size()) != m)
    throw std::invalid_argument("header announces " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph parse_khg(const std::string& text) {
  if (!text.empty() && text.back() != '\n') throw std::invalid_argument("khg text must end with a newline");
  std::istringstream in(text);
  return read_khg(in);
}

Hypergraph load_khg(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_khg(buf.str());
}

std::string to_khg(const Hypergraph& h) {
  std::string out = std::to_string(h.n()) + " " + std::to_string(h.k()) + " " + std::to_string(h.size()) + "\n";
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

void save_khg(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_khg(h);
}

}  // namespace emc
