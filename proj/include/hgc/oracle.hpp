#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hgc/errors.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/instances.hpp"
#include "hgc/rational.hpp"

namespace hgc {

/// Exhaustive computations refuse instances with more vertices than this.
struct ExhaustiveLimit {
  std::size_t max_vertices = 22;
};

namespace detail {

/// H relabelled onto local bit positions 0..v-1 (ascending id order), with
/// each edge stored as a mask and bucketed by its highest bit.
struct MaskedHypergraph {
  std::vector<VertexId> ids;
  std::vector<std::uint64_t> edge_masks;
  std::vector<std::vector<std::uint64_t>> edges_by_top;

  MaskedHypergraph(const UniformHypergraph& h, ExhaustiveLimit limit) : ids(h.vertices().ids()) {
    if (ids.size() > limit.max_vertices || ids.size() > 62)
      throw LimitExceeded("exhaustive search over " + std::to_string(ids.size()) + " vertices exceeds the limit of " +
                          std::to_string(std::min<std::size_t>(limit.max_vertices, 62)));
    std::vector<int> local(h.capacity() + 1, -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    edges_by_top.resize(ids.size());
    for (std::size_t e = 0; e < h.distinct_edge_count(); ++e) {
      std::uint64_t mask = 0;
      for (VertexId v : h.edge(e)) mask |= std::uint64_t{1} << local[v];
      edge_masks.push_back(mask);
      edges_by_top[static_cast<std::size_t>(63 - std::countl_zero(mask))].push_back(mask);
    }
  }

  std::size_t size() const { return ids.size(); }

  VertexSet to_set(std::uint64_t mask, std::size_t capacity) const {
    VertexSet s(capacity);
    while (mask) {
      s.insert(ids[static_cast<std::size_t>(std::countr_zero(mask))]);
      mask &= mask - 1;
    }
    return s;
  }

  bool independent(std::uint64_t mask) const {
    for (auto e : edge_masks)
      if ((mask & e) == e) return false;
    return true;
  }
};

/// Depth-first over vertices in ascending order; a vertex may join only if no
/// edge topped by it becomes complete. fn receives the local mask and size.
template <class Fn>
void backtrack_independent(const MaskedHypergraph& mh, std::optional<std::size_t> size, Fn&& fn) {
  const std::size_t v = mh.size();
  auto rec = [&](auto&& self, std::size_t next, std::uint64_t mask, std::size_t count) -> void {
    if (size && (count > *size || count + (v - next) < *size)) return;
    if (next == v) {
      fn(mask, count);
      return;
    }
    self(self, next + 1, mask, count);
    std::uint64_t with = mask | (std::uint64_t{1} << next);
    for (auto e : mh.edges_by_top[next])
      if ((with & e) == e) return;
    self(self, next + 1, with, count + 1);
  };
  rec(rec, 0, 0, 0);
}

}  // namespace detail

/// Calls fn(I) for every independent set of H (of size m, when given).
template <class Fn>
void for_each_independent_set(const UniformHypergraph& h, Fn&& fn, std::optional<std::size_t> m = std::nullopt,
                              ExhaustiveLimit limit = {}) {
  detail::MaskedHypergraph mh(h, limit);
  detail::backtrack_independent(mh, m, [&](std::uint64_t mask, std::size_t) { fn(mh.to_set(mask, h.capacity())); });
}

inline std::vector<VertexSet> independent_sets(const UniformHypergraph& h, std::optional<std::size_t> m = std::nullopt,
                                               ExhaustiveLimit limit = {}) {
  std::vector<VertexSet> out;
  for_each_independent_set(h, [&](VertexSet s) { out.push_back(std::move(s)); }, m, limit);
  return out;
}

/// |I(H, m)| for m = 0..v(H), by backtracking.
inline std::vector<BigInt> count_independent_by_size(const UniformHypergraph& h, ExhaustiveLimit limit = {}) {
  detail::MaskedHypergraph mh(h, limit);
  std::vector<std::uint64_t> counts(mh.size() + 1, 0);
  detail::backtrack_independent(mh, std::nullopt, [&](std::uint64_t, std::size_t count) { ++counts[count]; });
  return {counts.begin(), counts.end()};
}

/// |I(H, m)| for m = 0..v(H), by scanning all 2^v masks. The mask range is split
/// evenly over `threads` workers; the sum does not depend on the split.
inline std::vector<BigInt> count_independent_by_size_scan(const UniformHypergraph& h, ExhaustiveLimit limit = {},
                                                          unsigned threads = 1) {
  detail::MaskedHypergraph mh(h, limit);
  const std::uint64_t total = std::uint64_t{1} << mh.size();
  threads = std::max(1U, threads);
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(mh.size() + 1, 0));
  auto work = [&](unsigned w) {
    std::uint64_t lo = total / threads * w, hi = w + 1 == threads ? total : total / threads * (w + 1);
    for (std::uint64_t mask = lo; mask < hi; ++mask)
      if (mh.independent(mask)) ++partial[w][static_cast<std::size_t>(std::popcount(mask))];
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::vector<BigInt> out(mh.size() + 1, 0);
  for (const auto& p : partial)
    for (std::size_t m = 0; m < p.size(); ++m) out[m] += p[m];
  return out;
}

inline BigInt count_independent_sets(const UniformHypergraph& h, std::size_t m, ExhaustiveLimit limit = {}) {
  detail::MaskedHypergraph mh(h, limit);
  std::uint64_t count = 0;
  detail::backtrack_independent(mh, m, [&](std::uint64_t, std::size_t) { ++count; });
  return count;
}

/// alpha(H): the size of a largest independent set.
inline std::size_t independence_number(const UniformHypergraph& h, ExhaustiveLimit limit = {}) {
  auto counts = count_independent_by_size(h, limit);
  std::size_t best = 0;
  for (std::size_t m = 0; m < counts.size(); ++m)
    if (counts[m] > 0) best = m;
  return best;
}

/// Independent sets that no vertex can be added to.
inline std::vector<VertexSet> maximal_independent_sets(const UniformHypergraph& h, ExhaustiveLimit limit = {}) {
  detail::MaskedHypergraph mh(h, limit);
  std::vector<VertexSet> out;
  detail::backtrack_independent(mh, std::nullopt, [&](std::uint64_t mask, std::size_t) {
    for (std::size_t x = 0; x < mh.size(); ++x) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if (!(mask & bit) && mh.independent(mask | bit)) return;
    }
    out.push_back(mh.to_set(mask, h.capacity()));
  });
  return out;
}

/// ex(n, Hs): the most edges of an Hs-free t-graph on [n], as alpha of the copies hypergraph.
inline std::size_t extremal_number(std::size_t n, const SmallGraph& pattern, ExhaustiveLimit limit = {}) {
  if (n < pattern.vertex_count) {
    // no copy fits, so every t-set may be present
    SubsetIndexer all(n, pattern.t);
    return all.size();
  }
  return independence_number(copies_hypergraph(pattern, n), limit);
}

/// f_{n,m}(Hs): labelled Hs-free t-graphs on [n] with exactly m edges.
inline BigInt count_free_graphs(std::size_t n, std::size_t m, const SmallGraph& pattern, ExhaustiveLimit limit = {}) {
  if (n < pattern.vertex_count) {
    SubsetIndexer all(n, pattern.t);
    BigInt b = 1;
    if (m > all.size()) return 0;
    for (std::size_t i = 0; i < m; ++i) b = b * (all.size() - i) / (i + 1);
    return b;
  }
  return count_independent_sets(copies_hypergraph(pattern, n), m, limit);
}

/// Largest eps with H (F_s, eps)-dense for F_s = { A : |A| >= s }:
/// min over such A of e(H[A]) / e(H). Induced edge counts are monotone in A,
/// so only |A| = s is scanned.
inline Rational density_epsilon(const UniformHypergraph& h, std::size_t s, ExhaustiveLimit limit = {}) {
  if (h.edge_count() == 0) throw PreconditionError("density_epsilon needs e(H) >= 1");
  detail::MaskedHypergraph mh(h, limit);
  if (s > mh.size()) throw InputError("family size " + std::to_string(s) + " exceeds v(H)");
  std::vector<std::uint64_t> mult;
  for (std::size_t e = 0; e < h.distinct_edge_count(); ++e) mult.push_back(h.multiplicity(e));
  std::uint64_t best = h.edge_count();
  const std::uint64_t end = std::uint64_t{1} << mh.size();
  std::uint64_t mask = s == 0 ? 0 : (std::uint64_t{1} << s) - 1;
  while (mask < end) {
    std::uint64_t inside = 0;
    for (std::size_t e = 0; e < mh.edge_masks.size(); ++e)
      if ((mask & mh.edge_masks[e]) == mh.edge_masks[e]) inside += mult[e];
    best = std::min(best, inside);
    if (mask == 0) break;
    std::uint64_t low = mask & -mask, ripple = mask + low;  // next mask with the same popcount
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return Rational(BigInt(best), BigInt(h.edge_count()));
}

/// Number of k-term progressions (d >= 1) lying inside A.
inline std::uint64_t varnavides_count(const std::vector<long long>& a, int k) {
  if (k < 1) throw InputError("progression length must be positive");
  std::set<long long> set(a.begin(), a.end());
  if (set.size() < static_cast<std::size_t>(k)) return 0;
  std::uint64_t count = 0;
  const long long span = *set.rbegin() - *set.begin();
  for (long long first : set)
    for (long long d = 1; k == 1 ? d == 1 : d * (k - 1) <= span; ++d) {
      bool all = true;
      for (int i = 1; i < k && all; ++i) all = set.count(first + i * d) > 0;
      count += all ? 1 : 0;
    }
  return count;
}

/// Whether every subset of A of size ceil(delta |A|) contains a k-term progression.
/// Supersets inherit the progression, so larger subsets need no separate scan.
/// False whenever that size is below k.
inline bool szemeredi_check(const std::vector<long long>& a, const Rational& delta, int k,
                            std::size_t max_elements = 40) {
  std::set<long long> set(a.begin(), a.end());
  std::vector<long long> items(set.begin(), set.end());
  BigInt needed = ceil(delta * static_cast<long long>(items.size()));
  if (needed < k) return false;
  if (needed > static_cast<long long>(items.size())) return true;  // no such subset exists
  if (items.size() > max_elements || items.size() > 62)
    throw LimitExceeded("szemeredi_check over " + std::to_string(items.size()) + " elements exceeds the limit");
  const auto s = static_cast<std::size_t>(needed);

  std::vector<std::uint64_t> progressions;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      long long d = items[j] - items[i];
      std::uint64_t mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      bool ok = true;
      for (int t = 2; t < k && ok; ++t) {
        auto it = std::lower_bound(items.begin(), items.end(), items[i] + t * d);
        ok = it != items.end() && *it == items[i] + t * d;
        if (ok) mask |= std::uint64_t{1} << (it - items.begin());
      }
      if (ok) progressions.push_back(mask);
    }
  if (k <= 1) return true;

  const std::uint64_t end = std::uint64_t{1} << items.size();
  std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  while (mask < end) {
    bool found = false;
    for (auto p : progressions)
      if ((mask & p) == p) {
        found = true;
        break;
      }
    if (!found) return false;
    std::uint64_t low = mask & -mask, ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return true;
}

/// SplitMix64 finalizer; turns seed ^ trial into a well-mixed stream seed.
inline std::uint64_t split_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct McEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string generator = "mt19937_64 per trial, seeded splitmix64(seed ^ trial)";

  Rational fraction() const { return Rational(BigInt(successes), BigInt(trials)); }
};

/// Monte Carlo estimate of P([n]_p is (delta, k)-Szemeredi). Each trial keeps
/// every element of [n] independently with probability p, drawn exactly by
/// rejection sampling against p's denominator.
inline McEstimate mc_szemeredi(std::size_t n, const Rational& p, const Rational& delta, int k, std::uint64_t trials,
                               std::uint64_t seed) {
  if (trials < 1) throw InputError("need at least one trial");
  if (p < 0 || p > 1) throw InputError("p must lie in [0,1]");
  if (denom(p) > BigInt(std::uint64_t{1} << 62)) throw InputError("denominator of p too large for exact sampling");
  const auto den = static_cast<std::uint64_t>(denom(p));
  const auto num = static_cast<std::uint64_t>(numer(p));
  const std::uint64_t reject_from = std::numeric_limits<std::uint64_t>::max() / den * den;
  McEstimate out;
  out.trials = trials;
  out.seed = seed;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(split_seed(seed ^ trial));
    std::vector<long long> sample;
    for (std::size_t x = 1; x <= n; ++x) {
      std::uint64_t draw;
      do draw = rng();
      while (draw >= reject_from);
      if (draw % den < num) sample.push_back(static_cast<long long>(x));
    }
    if (szemeredi_check(sample, delta, k)) ++out.successes;
  }
  return out;
}

inline BigInt exact_binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (long long i = 0; i < b; ++i) out = out * (a - i) / (i + 1);
  return out;
}

/// One checked inequality lhs <= rhs. `vacuous` marks a right side that is
/// unbounded (a zero denominator with a positive exponent).
struct BinomialCheck {
  std::string name;
  BigInt lhs;
  Rational rhs;
  bool vacuous = false;
  bool passed = false;
};

/// The four standard binomial estimates for integers a >= b >= c >= 0:
///   entropy      C(a,b)   <= (e a / b)^b
///   shift_down   C(a,b-c) <= (b / (a-b))^c C(a,b)
///   shrink_top   C(b,c)   <= (b / a)^c C(a,c)
///   grow_top     C(a,c)   <= ((a-c) / (b-c))^c C(b,c)
/// e is replaced by a rational lower bound, so a pass is a proof of the real inequality.
inline std::vector<BinomialCheck> check_binomial_inequalities(long long a, long long b, long long c) {
  if (!(a >= b && b >= c && c >= 0)) throw PreconditionError("need a >= b >= c >= 0");
  static const Rational e_low = e_lower_bound();
  std::vector<BinomialCheck> out;
  auto add = [&](std::string name, BigInt lhs, std::optional<Rational> base, long long exponent, const BigInt& factor) {
    BinomialCheck check{std::move(name), std::move(lhs), 0, false, false};
    if (exponent == 0) {
      check.rhs = Rational(factor);
    } else if (!base) {
      check.vacuous = true;
    } else {
      check.rhs = pow(*base, static_cast<unsigned>(exponent)) * factor;
    }
    check.passed = check.vacuous || Rational(check.lhs) <= check.rhs;
    out.push_back(std::move(check));
  };
  auto ratio = [](long long num, long long den) -> std::optional<Rational> {
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  };
  std::optional<Rational> entropy_base;
  if (b > 0) entropy_base = e_low * a / b;
  add("entropy", exact_binomial(a, b), entropy_base, b, 1);
  add("shift_down", exact_binomial(a, b - c), ratio(b, a - b), c, exact_binomial(a, b));
  add("shrink_top", exact_binomial(b, c), ratio(b, a), c, exact_binomial(a, c));
  add("grow_top", exact_binomial(a, c), ratio(a - c, b - c), c, exact_binomial(b, c));
  return out;
}

}  // namespace hgc
