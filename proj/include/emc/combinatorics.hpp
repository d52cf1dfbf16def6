#pragma once

#include <span>
#include <vector>

namespace emc {

/// Calls `visit(subset)` for every r-subset of `ground` (assumed ascending),
/// in lexicographic order. `visit` returns false to stop early.
template <class Visit>
bool for_each_subset(std::span<const int> ground, int r, Visit&& visit) {
  const int n = static_cast<int>(ground.size());
  if (r < 0 || r > n) return true;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  std::vector<int> subset(r);
  while (true) {
    for (int i = 0; i < r; ++i) subset[i] = ground[idx[i]];
    if (!visit(std::span<const int>(subset))) return false;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<int> iota_vertices(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

}  // namespace emc
