#pragma once

#include "emc/hypergraph.hpp"

#include <string>

namespace emc {

enum class Winner { cover, clique, tie };
const char* to_string(Winner w);

struct BoundReport {
  int n = 0, k = 0, s = 0;
  Integer cover_term;   // C(n,k) - C(n-s,k)
  Integer clique_term;  // C(sk+k-1,k)
  Integer emc_bound;
  Winner winner = Winner::tie;
  bool in_range = true;  // n >= k(s+1)
};

BoundReport emc_bound(int n, int k, int s);

/// H_i: k-sets meeting [i(s+1)-1] in at least i vertices.
Hypergraph build_Hi(int n, int k, int s, int i);

/// H(U,W): k-sets of U + W meeting U. Labels are kept; n is max label.
Hypergraph build_HUW(const std::vector<Vertex>& u, const std::vector<Vertex>& w, int k);

/// H^p(U,W): k-sets with 1 <= |e & U| <= p.
Hypergraph build_HpUW(const std::vector<Vertex>& u, const std::vector<Vertex>& w, int k, int p);

struct Construction {
  Hypergraph h;
  int t = 0;
};

/// Apex family on [t] plus a copy of G shifted by t, with
/// t = floor((n-4s)/3 - eta*n).
Construction construction1(const Hypergraph& g, int s, const Rational& eta);
int construction1_t(int n, int s, const Rational& eta);

/// T = [t] glued in front of G (labels of G shifted by t), every k-set
/// meeting T added, with t = floor((n-ks)/(k-1)) - 1.
Construction construction2(const Hypergraph& g, int s);
int construction2_t(int n, int k, int s);

struct ThresholdReport {
  Integer value;  // clamped at 0
  Integer raw;
  bool clamped = false;
};

/// C(n-d,k-d) - C(n-d-s+1,k-d) + 1.
ThresholdReport degree_threshold_formula(int n, int k, int d, int s);

/// Main term (1 - (1 - s/n)^(k-d)) C(n-d,k-d).
Rational kot_asymptotic(int n, int k, int d, int s);

/// max{1 - ((k-1)/k)^(k-d), 1/2}.
Rational hpsko_threshold_coefficient(int k, int d);

/// The constant n_0 = 10^(10^7) quoted for the k = 4 theorem, as text.
inline constexpr const char* emc_k4_n0_text = "10^(10^7)";

}  // namespace emc
