#pragma once

// A second, naive rendering of one selection level: degrees are recounted from
// scratch at every step and the high-degree sets are found by scanning every
// subset of the vertex set.

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brute.hpp"

namespace brute {

using Q = boost::multiprecision::cpp_rational;

/// thresholds[level][ell], 1-based; top row given.
inline std::vector<std::vector<Q>> thresholds(const std::vector<Q>& top, const Q& p) {
  const int k = static_cast<int>(top.size());
  std::vector<std::vector<Q>> t(static_cast<std::size_t>(k) + 1, std::vector<Q>(static_cast<std::size_t>(k) + 2, 0));
  for (int ell = 1; ell <= k; ++ell) t[k][ell] = top[static_cast<std::size_t>(ell) - 1];
  for (int i = k - 1; i >= 1; --i)
    for (int ell = 1; ell <= i; ++ell) t[i][ell] = std::max(Q(2 * t[i + 1][ell + 1]), Q(p * t[i + 1][ell]));
  return t;
}

struct Level {
  Set available;
  Set selected;  // pick order
  Edges lower;   // sorted, repeats for multiplicity
  bool stopped = false;
};

inline bool contains(const Set& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline bool touches(const Set& e, const Set& w) {
  for (int x : e)
    if (contains(w, x)) return true;
  return false;
}

inline Level scythe(const Set& vertices, const Edges& next, const Set& independent,
                    const std::vector<std::vector<Q>>& table, std::size_t budget, int level) {
  Edges a = next;
  Set live = vertices;
  Edges lower;
  Level out;
  for (std::size_t j = 0; j < budget; ++j) {
    bool meets = false;
    for (int x : independent) meets = meets || contains(live, x);
    if (!meets) {
      out.stopped = true;
      return out;
    }
    Set rest = live;
    Edges alive = a;
    Set w;
    int u = 0;
    while (true) {
      int best = 0;
      long long best_degree = -1;
      for (int x : rest) {  // rest is ascending, so strict > keeps the smallest id
        long long d = degree(alive, {x});
        if (d > best_degree) {
          best = x;
          best_degree = d;
        }
      }
      w.push_back(best);
      rest.erase(std::find(rest.begin(), rest.end(), best));
      Edges kept;
      for (auto& e : alive)
        if (!contains(e, best)) kept.push_back(e);
      alive = kept;
      if (contains(independent, best)) {
        u = best;
        break;
      }
    }
    out.selected.push_back(u);
    for (auto& e : a)
      if (contains(e, u)) {
        Set link;
        for (int x : e)
          if (x != u) link.push_back(x);
        lower.push_back(link);
      }
    Edges kept;
    for (auto& e : a) {
      if (touches(e, w)) continue;
      bool high = false;
      for (int ell = 1; ell <= level && !high; ++ell)
        for (auto& t : subsets_of_size(static_cast<int>(vertices.back()), ell)) {
          if (!std::includes(vertices.begin(), vertices.end(), t.begin(), t.end())) continue;
          if (2 * Q(degree(lower, t)) >= table[level][ell] && subset(t, e)) {
            high = true;
            break;
          }
        }
      if (!high) kept.push_back(e);
    }
    a = kept;
    Set next_live;
    for (int x : live)
      if (!contains(w, x)) next_live.push_back(x);
    live = next_live;
  }
  out.available = live;
  std::sort(lower.begin(), lower.end());
  out.lower = lower;
  return out;
}

}  // namespace brute
