#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hgc/errors.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/rational.hpp"
#include "hgc/vertex_set.hpp"

namespace hgc {

/// The degree thresholds Delta_ell^level for 1 <= ell <= level <= k.
///
/// The top row is the max-degree profile of the source hypergraph; each lower
/// row is max{2 * Delta_{ell+1}^{level+1}, p * Delta_ell^{level+1}}, kept exact.
class ThresholdTable {
 public:
  ThresholdTable(const UniformHypergraph& source, Rational p) : ThresholdTable(profile(source), std::move(p)) {}

  /// Builds the table from an explicit top row (Delta_1^k, ..., Delta_k^k).
  ThresholdTable(const std::vector<Rational>& top_row, Rational p) : p_(std::move(p)) {
    if (p_ <= 0 || p_ >= 1) throw PreconditionError("p must lie in (0,1), got " + to_string(p_));
    if (top_row.empty()) throw InputError("empty degree profile");
    k_ = static_cast<int>(top_row.size());
    rows_.assign(static_cast<std::size_t>(k_) + 1, {});
    rows_[static_cast<std::size_t>(k_)] = top_row;
    for (int level = k_ - 1; level >= 1; --level) {
      const auto& above = rows_[static_cast<std::size_t>(level) + 1];
      auto& row = rows_[static_cast<std::size_t>(level)];
      row.resize(static_cast<std::size_t>(level));
      for (int ell = 1; ell <= level; ++ell) {
        Rational doubled = 2 * above[static_cast<std::size_t>(ell)];
        Rational damped = p_ * above[static_cast<std::size_t>(ell) - 1];
        row[static_cast<std::size_t>(ell) - 1] = doubled > damped ? doubled : damped;
      }
    }
    floors_.assign(rows_.size(), {});
    for (int level = 1; level <= k_; ++level)
      for (const auto& value : rows_[static_cast<std::size_t>(level)])
        floors_[static_cast<std::size_t>(level)].push_back(ceil(value / 2));
  }

  int top_level() const { return k_; }
  const Rational& p() const { return p_; }

  const Rational& at(int ell, int level) const {
    check(ell, level);
    return rows_[static_cast<std::size_t>(level)][static_cast<std::size_t>(ell) - 1];
  }

  /// Smallest integer degree d with d >= Delta_ell^level / 2.
  const BigInt& high_degree_floor(int ell, int level) const {
    check(ell, level);
    return floors_[static_cast<std::size_t>(level)][static_cast<std::size_t>(ell) - 1];
  }

  bool operator==(const ThresholdTable&) const = default;

 private:
  static std::vector<Rational> profile(const UniformHypergraph& h) {
    std::vector<Rational> row;
    for (int ell = 1; ell <= h.uniformity(); ++ell)
      row.emplace_back(h.vertex_count() < static_cast<std::size_t>(ell) ? 0 : max_degree(h, ell));
    return row;
  }

  void check(int ell, int level) const {
    if (level < 1 || level > k_ || ell < 1 || ell > level)
      throw InputError("threshold index (" + std::to_string(ell) + ", " + std::to_string(level) + ") out of range");
  }

  int k_ = 0;
  Rational p_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::vector<BigInt>> floors_;
};

struct MaxDegreeOrder {
  std::vector<VertexId> order;

  /// W(u): the initial segment of the order ending with u.
  VertexSet prefix_through(VertexId u, std::size_t capacity) const {
    VertexSet out(capacity);
    for (VertexId v : order) {
      out.insert(v);
      if (v == u) return out;
    }
    throw InputError("vertex " + std::to_string(u) + " is not in the order");
  }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> incidence(const UniformHypergraph& h) {
  std::vector<std::vector<std::size_t>> by_vertex(h.capacity() + 1);
  for (std::size_t i = 0; i < h.distinct_edge_count(); ++i)
    for (VertexId v : h.edge(i)) by_vertex[v].push_back(i);
  return by_vertex;
}

/// Greedy removal of a maximum-degree vertex from the hypergraph formed by the
/// alive edges on the live vertices. Ties go to the smallest id.
class Peeler {
 public:
  Peeler(const UniformHypergraph& h, const std::vector<std::vector<std::size_t>>& by_vertex,
         std::vector<char> alive, VertexSet live)
      : h_(h), by_vertex_(by_vertex), alive_(std::move(alive)), live_(std::move(live)), degree_(h.capacity() + 1, 0) {
    for (std::size_t i = 0; i < h.distinct_edge_count(); ++i)
      if (alive_[i])
        for (VertexId v : h.edge(i)) degree_[v] += h.multiplicity(i);
  }

  bool done() const { return live_.empty(); }

  VertexId pop() {
    VertexId best = 0;
    std::uint64_t best_degree = 0;
    live_.for_each([&](VertexId v) {
      if (best == 0 || degree_[v] > best_degree) {
        best = v;
        best_degree = degree_[v];
      }
    });
    live_.erase(best);
    for (std::size_t i : by_vertex_[best]) {
      if (!alive_[i]) continue;
      alive_[i] = 0;
      for (VertexId v : h_.edge(i)) degree_[v] -= h_.multiplicity(i);
    }
    return best;
  }

 private:
  const UniformHypergraph& h_;
  const std::vector<std::vector<std::size_t>>& by_vertex_;
  std::vector<char> alive_;
  VertexSet live_;
  std::vector<std::uint64_t> degree_;
};

/// The union over ell of M_ell^level for a multiset of level-sets.
class HighDegreeFamily {
 public:
  HighDegreeFamily(const std::map<std::vector<VertexId>, std::uint64_t>& edges, const ThresholdTable& table,
                   int level)
      : level_(level) {
    for (int ell = 1; ell <= level; ++ell) {
      const BigInt& floor = table.high_degree_floor(ell, level);
      if (floor <= 0) {
        everything_ = true;
        return;
      }
      std::map<std::vector<VertexId>, std::uint64_t> degrees;
      for (const auto& [e, m] : edges)
        for_each_subset(e, static_cast<std::size_t>(ell), [&](const std::vector<VertexId>& t) { degrees[t] += m; });
      for (const auto& [t, d] : degrees)
        if (BigInt(d) >= floor) sets_.insert(t);
    }
  }

  /// Whether the edge contains some member of the family.
  bool hits(std::span<const VertexId> edge) const {
    if (everything_) return true;
    if (sets_.empty()) return false;
    bool found = false;
    for (int ell = 1; ell <= level_ && !found; ++ell)
      for_each_subset(edge, static_cast<std::size_t>(ell), [&](const std::vector<VertexId>& t) {
        if (!found && sets_.count(t)) found = true;
      });
    return found;
  }

 private:
  int level_;
  bool everything_ = false;
  std::set<std::vector<VertexId>> sets_;
};

inline UniformHypergraph from_accumulator(int k, const VertexSet& vertices,
                                          const std::map<std::vector<VertexId>, std::uint64_t>& acc) {
  std::vector<WeightedEdge> edges;
  edges.reserve(acc.size());
  for (const auto& [e, m] : acc) edges.push_back({e, m});
  return UniformHypergraph(k, vertices, std::move(edges));
}

}  // namespace detail

/// Max-degree order of G[live], recomputing degrees in the shrinking remainder.
inline MaxDegreeOrder max_degree_order(const UniformHypergraph& g, const VertexSet& live) {
  detail::require_within(g, live, "live set");
  auto by_vertex = detail::incidence(g);
  std::vector<char> alive(g.distinct_edge_count(), 0);
  for (std::size_t i = 0; i < g.distinct_edge_count(); ++i) alive[i] = g.edge_inside(i, live) ? 1 : 0;
  detail::Peeler peeler(g, by_vertex, std::move(alive), live);
  MaxDegreeOrder out;
  while (!peeler.done()) out.order.push_back(peeler.pop());
  return out;
}

/// M_ell^level(G): the ell-sets whose degree in G is at least Delta_ell^level / 2.
///
/// When the threshold is zero every ell-subset of V(G) qualifies and all of them
/// are returned. That only happens for an edgeless source hypergraph.
inline std::vector<std::vector<VertexId>> high_degree_sets(const UniformHypergraph& g, int ell,
                                                           const ThresholdTable& table, int level) {
  if (g.uniformity() != level)
    throw InputError("high_degree_sets: hypergraph is " + std::to_string(g.uniformity()) + "-uniform, level is " +
                     std::to_string(level));
  if (ell < 1 || ell > level) throw InputError("subset size " + std::to_string(ell) + " outside [1, level]");
  const BigInt& floor = table.high_degree_floor(ell, level);
  std::vector<std::vector<VertexId>> out;
  if (floor <= 0) {
    auto ids = g.vertices().ids();
    for_each_subset(ids, static_cast<std::size_t>(ell), [&](const std::vector<VertexId>& t) { out.push_back(t); });
    return out;
  }
  const DegreeIndex index(g, ell);
  for (const auto& [t, d] : index.entries())
    if (BigInt(d) >= floor) out.push_back(t);
  return out;
}

/// One level of the descent: the selected vertices B, the set A in which the rest
/// of I must lie, and the hypergraph one uniformity lower.
struct ScytheResult {
  VertexSet available;                ///< A_i
  std::vector<VertexId> selected;     ///< B_i, in selection order
  UniformHypergraph lower;            ///< H_i
  bool stopped_early = false;         ///< I ran out before the step budget
  std::size_t peeled = 0;             ///< sum of |W(u_j)| over the executed steps

  bool operator==(const ScytheResult&) const = default;

  VertexSet selected_set() const { return VertexSet::of(available.capacity(), selected); }
};

/// Runs at most `budget` selection steps of the Scythe procedure on `next`
/// (uniformity level + 1) and the independent set I.
///
/// Each step picks u, the first vertex of I in the max-degree order of the
/// current hypergraph A, adds the link of u in A to the lower hypergraph with
/// multiplicity, then drops from A the initial segment W(u) together with every
/// edge that touches W(u) or contains a high-degree set of the lower hypergraph.
/// If I misses the vertices of A before the budget is spent, the lower
/// hypergraph is reset to empty and A_i is empty.
inline ScytheResult scythe_step(const UniformHypergraph& next, const VertexSet& independent,
                                const ThresholdTable& table, std::size_t budget, int level) {
  if (level < 1) throw InputError("scythe level must be at least 1");
  if (next.uniformity() != level + 1)
    throw InputError("scythe level " + std::to_string(level) + " needs a " + std::to_string(level + 1) +
                     "-uniform hypergraph, got " + std::to_string(next.uniformity()) + "-uniform");
  if (level >= table.top_level()) throw InputError("scythe level above the threshold table");
  if (budget < 1) throw InputError("step budget must be at least 1");
  detail::require_within(next, independent, "I");
  if (!is_independent(next, independent)) throw ContractError("scythe_step: I is not independent");

  const std::size_t capacity = next.capacity();
  auto by_vertex = detail::incidence(next);
  std::vector<char> alive(next.distinct_edge_count(), 1);
  VertexSet live = next.vertices();
  std::map<std::vector<VertexId>, std::uint64_t> lower;
  ScytheResult out;

  for (std::size_t step = 0; step < budget; ++step) {
    if (!independent.intersects(live)) {
      out.available = VertexSet(capacity);
      out.lower = UniformHypergraph(level, next.vertices(), {});
      out.stopped_early = true;
      return out;
    }

    detail::Peeler peeler(next, by_vertex, alive, live);
    VertexSet segment(capacity);
    VertexId u = 0;
    do {
      u = peeler.pop();
      segment.insert(u);
    } while (!independent.contains(u));
    out.selected.push_back(u);
    out.peeled += segment.size();

    for (std::size_t i : by_vertex[u]) {
      if (!alive[i]) continue;
      std::vector<VertexId> link;
      for (VertexId v : next.edge(i))
        if (v != u) link.push_back(v);
      lower[link] += next.multiplicity(i);
    }

    detail::HighDegreeFamily high(lower, table, level);
    live -= segment;
    for (std::size_t i = 0; i < next.distinct_edge_count(); ++i) {
      if (!alive[i]) continue;
      bool touches = false;
      for (VertexId v : next.edge(i)) touches = touches || segment.contains(v);
      if (touches || high.hits(next.edge(i))) alive[i] = 0;
    }
  }

  out.available = live;
  out.lower = detail::from_accumulator(level, next.vertices(), lower);
  return out;
}

}  // namespace hgc
