#pragma once

// Naive reference computations for the tests. Deliberately written without the
// library's indices, masks or canonical forms so they can serve as oracles.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using Set = std::vector<int>;
using Edges = std::vector<Set>;  // with repeats for multiplicity

inline bool subset(const Set& small, const Set& big) {
  for (int x : small)
    if (std::find(big.begin(), big.end(), x) == big.end()) return false;
  return true;
}

/// All subsets of {1..n} as sorted vectors, by increasing mask.
inline std::vector<Set> all_subsets(int n) {
  std::vector<Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Set s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

/// The size-element subsets of {1..n} in lexicographic order.
inline std::vector<Set> subsets_of_size(int n, int size) {
  std::vector<Set> out;
  if (size < 0 || size > n) return out;
  Set s(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(s);
    int i = size - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - size + i + 1) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j) - 1] + 1;
  }
  return out;
}

/// k-term APs in [n], by checking every k-subset for equal gaps.
inline Edges aps(int n, int k) {
  Edges out;
  for (auto& s : subsets_of_size(n, k)) {
    bool ok = true;
    for (int i = 2; i < k; ++i) ok = ok && s[i] - s[i - 1] == s[1] - s[0];
    if (ok) out.push_back(s);
  }
  return out;
}

/// Sets {a, a+s, ..., a+ks} with s a positive r-th power, by checking every (k+1)-subset.
inline Edges poly_aps(int n, int k, int r) {
  Edges out;
  for (auto& s : subsets_of_size(n, k + 1)) {
    int gap = s[1] - s[0];
    bool equal = true;
    for (int i = 2; i <= k; ++i) equal = equal && s[i] - s[i - 1] == gap;
    bool power = false;
    for (int d = 1;; ++d) {
      long long q = 1;
      for (int i = 0; i < r; ++i) q *= d;
      if (q > gap) break;
      power = power || q == gap;
    }
    if (equal && power) out.push_back(s);
  }
  return out;
}

inline long long degree(const Edges& edges, const Set& t) {
  long long d = 0;
  for (auto& e : edges) d += subset(t, e) ? 1 : 0;
  return d;
}

inline long long max_degree(const Edges& edges, int n, int ell) {
  long long best = 0;
  for (auto& t : subsets_of_size(n, ell)) best = std::max(best, degree(edges, t));
  return best;
}

/// Largest number of times one edge repeats.
inline long long max_multiplicity(Edges edges) {
  std::sort(edges.begin(), edges.end());
  long long best = 0, run = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    run = i > 0 && edges[i] == edges[i - 1] ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

inline bool independent(const Edges& edges, const Set& s) {
  for (auto& e : edges)
    if (subset(e, s)) return false;
  return true;
}

inline std::vector<long long> independent_counts(const Edges& edges, int n) {
  std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
  for (auto& s : all_subsets(n))
    if (independent(edges, s)) ++out[s.size()];
  return out;
}

inline int alpha(const Edges& edges, int n) {
  auto c = independent_counts(edges, n);
  int best = 0;
  for (int m = 0; m <= n; ++m)
    if (c[static_cast<std::size_t>(m)]) best = m;
  return best;
}

/// Graphs on [n] as edge lists of pairs; checks every subset of the pair list.
inline long long count_triangle_free(int n, int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
  long long count = 0;
  const int total = static_cast<int>(pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    if (__builtin_popcountll(mask) != m) continue;
    std::set<std::pair<int, int>> present;
    for (int i = 0; i < total; ++i)
      if (mask >> i & 1U) present.insert(pairs[static_cast<std::size_t>(i)]);
    bool free = true;
    for (int a = 1; a <= n && free; ++a)
      for (int b = a + 1; b <= n && free; ++b)
        for (int c = b + 1; c <= n && free; ++c)
          free = !(present.count({a, b}) && present.count({a, c}) && present.count({b, c}));
    count += free ? 1 : 0;
  }
  return count;
}

inline int max_triangle_free_edges(int n) {
  int pairs = n * (n - 1) / 2;
  for (int m = pairs; m >= 0; --m)
    if (count_triangle_free(n, m) > 0) return m;
  return 0;
}

/// (e(U) - 1) / (|U| - t) maximised over vertex subsets U with |U| > t, as (num, den) reduced.
inline std::pair<long long, long long> density(const Edges& edges, int n, int t) {
  long long bn = 0, bd = 1;
  for (auto& u : all_subsets(n)) {
    if (static_cast<int>(u.size()) <= t) continue;
    long long e = 0;
    for (auto& edge : edges) e += subset(edge, u) ? 1 : 0;
    long long num = e - 1, den = static_cast<long long>(u.size()) - t;
    if (num * bd > bn * den) {
      bn = num;
      bd = den;
    }
  }
  long long g = std::gcd(bn < 0 ? -bn : bn, bd);
  if (g == 0) g = 1;
  return {bn / g, bd / g};
}

inline unsigned long long binom(unsigned long long a, unsigned long long b) {
  if (b > a) return 0;
  unsigned long long r = 1;
  for (unsigned long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace brute
