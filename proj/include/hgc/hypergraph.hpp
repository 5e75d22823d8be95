#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/errors.hpp"
#include "hgc/vertex_set.hpp"

namespace hgc {

/// Sorted vertex tuple together with how many parallel copies of it exist.
struct WeightedEdge {
  std::vector<VertexId> vertices;
  std::uint64_t multiplicity = 1;

  bool operator==(const WeightedEdge&) const = default;
};

/// Calls fn(subset) for every `size`-element subset of the sorted tuple `items`,
/// in lexicographic order. The subset is passed as a sorted vector.
template <class Fn>
void for_each_subset(std::span<const VertexId> items, std::size_t size, Fn&& fn) {
  if (size > items.size()) return;
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  std::vector<VertexId> subset(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) subset[i] = items[pick[i]];
    fn(subset);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == items.size() - size + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// k-uniform multihypergraph on a vertex set V inside the id space [1, capacity].
///
/// Edges are stored canonically: each as an ascending tuple, the tuples in
/// lexicographic order, equal tuples merged into one entry with a multiplicity.
/// The object is immutable once constructed.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;

  UniformHypergraph(int k, VertexSet vertices, std::vector<WeightedEdge> edges)
      : k_(k), vertices_(std::move(vertices)) {
    if (k < 1) throw InputError("uniformity must be at least 1");
    for (auto& e : edges) {
      if (e.vertices.size() != static_cast<std::size_t>(k))
        throw InputError("edge with " + std::to_string(e.vertices.size()) + " vertices in a " +
                         std::to_string(k) + "-uniform hypergraph");
      std::sort(e.vertices.begin(), e.vertices.end());
      if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end())
        throw InputError("edge with a repeated vertex");
      for (VertexId v : e.vertices)
        if (!vertices_.contains(v))
          throw InputError("edge vertex " + std::to_string(v) + " is not in the vertex set");
      if (e.multiplicity == 0) throw InputError("edge multiplicity must be positive");
    }
    std::sort(edges.begin(), edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) { return a.vertices < b.vertices; });
    for (auto& e : edges) {
      if (!multiplicity_.empty() && std::equal(e.vertices.begin(), e.vertices.end(), flat_.end() - k_)) {
        multiplicity_.back() += e.multiplicity;
        continue;
      }
      flat_.insert(flat_.end(), e.vertices.begin(), e.vertices.end());
      multiplicity_.push_back(e.multiplicity);
    }
    for (auto m : multiplicity_) total_ += m;
  }

  /// Simple or multi hypergraph on the full id space [1, capacity].
  static UniformHypergraph on_range(int k, std::size_t capacity, const std::vector<std::vector<VertexId>>& edges) {
    std::vector<WeightedEdge> weighted;
    weighted.reserve(edges.size());
    for (const auto& e : edges) weighted.push_back({e, 1});
    return UniformHypergraph(k, VertexSet::full(capacity), std::move(weighted));
  }

  int uniformity() const { return k_; }
  std::size_t capacity() const { return vertices_.capacity(); }
  const VertexSet& vertices() const { return vertices_; }
  /// v(H)
  std::size_t vertex_count() const { return vertices_.size(); }
  /// e(H), counted with multiplicity.
  std::uint64_t edge_count() const { return total_; }
  std::size_t distinct_edge_count() const { return multiplicity_.size(); }

  std::span<const VertexId> edge(std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  std::uint64_t multiplicity(std::size_t i) const { return multiplicity_[i]; }

  std::vector<WeightedEdge> edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(distinct_edge_count());
    for (std::size_t i = 0; i < distinct_edge_count(); ++i) {
      auto e = edge(i);
      out.push_back({{e.begin(), e.end()}, multiplicity_[i]});
    }
    return out;
  }

  bool edge_inside(std::size_t i, const VertexSet& set) const {
    for (VertexId v : edge(i))
      if (!set.contains(v)) return false;
    return true;
  }

  bool operator==(const UniformHypergraph&) const = default;

 private:
  int k_ = 1;
  VertexSet vertices_;
  std::vector<VertexId> flat_;
  std::vector<std::uint64_t> multiplicity_;
  std::uint64_t total_ = 0;
};

namespace detail {

inline void require_within(const UniformHypergraph& h, const VertexSet& s, const char* what) {
  if (s.capacity() != h.capacity() || !s.is_subset_of(h.vertices()))
    throw InputError(std::string(what) + " is not a subset of the vertex set");
}

inline std::vector<VertexId> sorted_ids(std::span<const VertexId> t) {
  std::vector<VertexId> out(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// deg_H(T): edges containing T, with multiplicity. Scans the edge list.
inline std::uint64_t degree(const UniformHypergraph& h, const VertexSet& t) {
  detail::require_within(h, t, "T");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < h.distinct_edge_count(); ++i) {
    std::size_t hit = 0;
    for (VertexId v : h.edge(i))
      if (t.contains(v)) ++hit;
    if (hit == t.size()) d += h.multiplicity(i);
  }
  return d;
}

/// Degrees of all ell-sets that lie in at least one edge, aggregated edge by edge.
/// Sets absent from the index have degree zero.
class DegreeIndex {
 public:
  DegreeIndex(const UniformHypergraph& h, int ell) : ell_(ell) {
    if (ell < 1 || ell > h.uniformity())
      throw InputError("subset size " + std::to_string(ell) + " outside [1, " + std::to_string(h.uniformity()) + "]");
    for (std::size_t i = 0; i < h.distinct_edge_count(); ++i) {
      auto m = h.multiplicity(i);
      for_each_subset(h.edge(i), static_cast<std::size_t>(ell),
                      [&](const std::vector<VertexId>& t) { degrees_[t] += m; });
    }
  }

  int subset_size() const { return ell_; }

  std::uint64_t degree(std::span<const VertexId> t) const {
    auto it = degrees_.find(detail::sorted_ids(t));
    return it == degrees_.end() ? 0 : it->second;
  }

  std::uint64_t max() const {
    std::uint64_t best = 0;
    for (const auto& [t, d] : degrees_) best = std::max(best, d);
    return best;
  }

  const std::map<std::vector<VertexId>, std::uint64_t>& entries() const { return degrees_; }

 private:
  int ell_;
  std::map<std::vector<VertexId>, std::uint64_t> degrees_;
};

/// Delta_ell(H): the largest degree of an ell-element vertex set.
inline std::uint64_t max_degree(const UniformHypergraph& h, int ell) {
  if (ell < 1 || ell > h.uniformity())
    throw InputError("subset size " + std::to_string(ell) + " outside [1, " + std::to_string(h.uniformity()) + "]");
  if (h.vertex_count() < static_cast<std::size_t>(ell))
    throw InputError("hypergraph has fewer than " + std::to_string(ell) + " vertices");
  return DegreeIndex(h, ell).max();
}

/// H[A]: same id space, vertex set A, the edges of H lying entirely in A.
inline UniformHypergraph induced(const UniformHypergraph& h, const VertexSet& a) {
  detail::require_within(h, a, "A");
  std::vector<WeightedEdge> kept;
  for (std::size_t i = 0; i < h.distinct_edge_count(); ++i)
    if (h.edge_inside(i, a)) kept.push_back({{h.edge(i).begin(), h.edge(i).end()}, h.multiplicity(i)});
  return UniformHypergraph(h.uniformity(), a, std::move(kept));
}

inline bool is_independent(const UniformHypergraph& h, const VertexSet& set) {
  detail::require_within(h, set, "I");
  for (std::size_t i = 0; i < h.distinct_edge_count(); ++i)
    if (h.edge_inside(i, set)) return false;
  return true;
}

/// The multiset { e \ {u} : u in e }, sorted.
inline std::vector<WeightedEdge> vertex_link(const UniformHypergraph& h, VertexId u) {
  if (!h.vertices().contains(u)) throw InputError("vertex " + std::to_string(u) + " is not in the hypergraph");
  std::vector<WeightedEdge> out;
  for (std::size_t i = 0; i < h.distinct_edge_count(); ++i) {
    auto e = h.edge(i);
    if (std::find(e.begin(), e.end(), u) == e.end()) continue;
    WeightedEdge link{{}, h.multiplicity(i)};
    for (VertexId v : e)
      if (v != u) link.vertices.push_back(v);
    out.push_back(std::move(link));
  }
  std::sort(out.begin(), out.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.vertices < b.vertices; });
  return out;
}

// Text format: first non-comment line "k v e", then e lines of k ids.
// Lines starting with '#' and blank lines are ignored; repeated lines add multiplicity.

inline UniformHypergraph read_hypergraph(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw InputError("hypergraph file has no header");
  long long k = 0, v = 0, e = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> k >> v >> e) || (header >> extra))
      throw InputError("header must be 'k v e', got '" + line + "'");
  }
  if (k < 1 || v < 0 || e < 0) throw InputError("header values out of range: '" + line + "'");
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i) {
    if (!next_line()) throw InputError("expected " + std::to_string(e) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    WeightedEdge edge;
    long long id = 0;
    while (row >> id) {
      if (id < 1 || id > v) throw InputError("vertex id " + std::to_string(id) + " outside [1, " + std::to_string(v) + "]");
      edge.vertices.push_back(static_cast<VertexId>(id));
    }
    if (!row.eof()) throw InputError("non-numeric token in edge line '" + line + "'");
    edges.push_back(std::move(edge));
  }
  if (next_line()) throw InputError("trailing content after the declared edges: '" + line + "'");
  return UniformHypergraph(static_cast<int>(k), VertexSet::full(static_cast<std::size_t>(v)), std::move(edges));
}

/// Writes the text format. v is the id-space capacity; an edge of multiplicity m
/// is written as m identical lines.
inline void write_hypergraph(std::ostream& out, const UniformHypergraph& h) {
  out << h.uniformity() << ' ' << h.capacity() << ' ' << h.edge_count() << '\n';
  for (std::size_t i = 0; i < h.distinct_edge_count(); ++i) {
    for (std::uint64_t m = 0; m < h.multiplicity(i); ++m) {
      bool first = true;
      for (VertexId v : h.edge(i)) {
        out << (first ? "" : " ") << v;
        first = false;
      }
      out << '\n';
    }
  }
}

}  // namespace hgc
