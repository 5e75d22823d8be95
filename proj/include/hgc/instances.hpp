#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/errors.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/rational.hpp"

namespace hgc {

/// A small simple t-uniform hypergraph (t = 2 for ordinary graphs): the
/// forbidden configuration whose copies become hyperedges.
struct SmallGraph {
  int t = 2;
  std::size_t vertex_count = 0;
  std::vector<std::vector<VertexId>> edges;  ///< sorted tuples, sorted list

  static SmallGraph make(int t, std::size_t vertex_count, std::vector<std::vector<VertexId>> edges) {
    if (t < 1) throw InputError("edge arity must be at least 1");
    for (auto& e : edges) {
      if (e.size() != static_cast<std::size_t>(t)) throw InputError("edge arity does not match t");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw InputError("edge with a repeated vertex");
      if (e.front() < 1 || e.back() > vertex_count) throw InputError("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InputError("repeated edge in a simple graph");
    return {t, vertex_count, std::move(edges)};
  }

  std::size_t edge_count() const { return edges.size(); }
};

namespace graphs {

inline SmallGraph complete(std::size_t n) {
  std::vector<std::vector<VertexId>> e;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) e.push_back({a, b});
  return SmallGraph::make(2, n, e);
}

inline SmallGraph path(std::size_t n) {
  std::vector<std::vector<VertexId>> e;
  for (VertexId a = 1; a < n; ++a) e.push_back({a, a + 1});
  return SmallGraph::make(2, n, e);
}

inline SmallGraph cycle(std::size_t n) {
  auto g = path(n);
  g.edges.push_back({1, static_cast<VertexId>(n)});
  return SmallGraph::make(2, n, g.edges);
}

}  // namespace graphs

/// Edge-list text format: header "t v e", then e lines of t ids; '#' lines ignored.
inline SmallGraph read_small_graph(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw InputError("graph file has no header");
  long long t = 0, v = 0, e = 0;
  if (!(std::istringstream(line) >> t >> v >> e) || t < 1 || v < 0 || e < 0)
    throw InputError("graph header must be 't v e', got '" + line + "'");
  std::vector<std::vector<VertexId>> edges;
  for (long long i = 0; i < e; ++i) {
    if (!next_line()) throw InputError("graph file ends before " + std::to_string(e) + " edges");
    std::istringstream row(line);
    std::vector<VertexId> edge;
    long long id = 0;
    while (row >> id) {
      if (id < 1 || id > v) throw InputError("graph vertex " + std::to_string(id) + " out of range");
      edge.push_back(static_cast<VertexId>(id));
    }
    edges.push_back(std::move(edge));
  }
  return SmallGraph::make(static_cast<int>(t), static_cast<std::size_t>(v), std::move(edges));
}

inline void write_small_graph(std::ostream& out, const SmallGraph& g) {
  out << g.t << ' ' << g.vertex_count << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

/// Hypergraph of k-term arithmetic progressions {a, a+d, ..., a+(k-1)d} in [n], d >= 1.
inline UniformHypergraph ap_hypergraph(std::size_t n, int k) {
  if (k < 3) throw InputError("progression length k must be at least 3");
  if (n < static_cast<std::size_t>(k)) throw InputError("need n >= k");
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t d = 1; 1 + (k - 1) * d <= n; ++d)
    for (std::size_t a = 1; a + (k - 1) * d <= n; ++a) {
      std::vector<VertexId> e;
      for (int i = 0; i < k; ++i) e.push_back(static_cast<VertexId>(a + i * d));
      edges.push_back(std::move(e));
    }
  return UniformHypergraph::on_range(k, n, edges);
}

/// Hypergraph of sets {a, a + d^r, ..., a + k d^r} in [n]; (k+1)-uniform.
inline UniformHypergraph poly_ap_hypergraph(std::size_t n, int k, int r) {
  if (k < 1 || r < 1) throw InputError("need k >= 1 and r >= 1");
  if (n < static_cast<std::size_t>(k) + 1) throw InputError("need n >= k + 1");
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t d = 1;; ++d) {
    std::size_t step = 1;
    for (int i = 0; i < r; ++i) step *= d;
    if (1 + k * step > n) break;
    for (std::size_t a = 1; a + k * step <= n; ++a) {
      std::vector<VertexId> e;
      for (int i = 0; i <= k; ++i) e.push_back(static_cast<VertexId>(a + i * step));
      edges.push_back(std::move(e));
    }
  }
  return UniformHypergraph::on_range(k + 1, n, edges);
}

/// Row-major id of a point of [n]^dim: 1 + sum (x_i - 1) n^(dim-1-i).
inline VertexId grid_id(const std::vector<long long>& point, std::size_t n) {
  std::size_t id = 0;
  for (long long x : point) {
    if (x < 1 || static_cast<std::size_t>(x) > n) throw InputError("grid point outside [n]^dim");
    id = id * n + static_cast<std::size_t>(x - 1);
  }
  return static_cast<VertexId>(id + 1);
}

inline std::vector<long long> grid_point(VertexId id, std::size_t n, int dim) {
  std::vector<long long> point(static_cast<std::size_t>(dim));
  std::size_t rest = id - 1;
  for (int i = dim - 1; i >= 0; --i) {
    point[static_cast<std::size_t>(i)] = static_cast<long long>(rest % n) + 1;
    rest /= n;
  }
  return point;
}

/// Hypergraph of homothetic copies a + bF of a configuration F inside [n]^dim,
/// over integer translations a and nonzero integer dilations b. Copies equal as
/// sets are one edge.
inline UniformHypergraph homothetic_hypergraph(const std::vector<std::vector<long long>>& config, int dim,
                                               std::size_t n) {
  if (config.size() < 2) throw InputError("configuration needs at least two points");
  if (dim < 1 || n < 1) throw InputError("need dim >= 1 and n >= 1");
  for (const auto& x : config)
    if (x.size() != static_cast<std::size_t>(dim)) throw InputError("configuration point of wrong dimension");
  std::set<std::vector<long long>> distinct(config.begin(), config.end());
  if (distinct.size() != config.size()) throw InputError("configuration points must be distinct");

  std::size_t vertices = 1;
  for (int i = 0; i < dim; ++i) vertices *= n;
  const long long side = static_cast<long long>(n);
  long long spread = 0;
  for (int i = 0; i < dim; ++i) {
    long long lo = config[0][static_cast<std::size_t>(i)], hi = lo;
    for (const auto& x : config) {
      lo = std::min(lo, x[static_cast<std::size_t>(i)]);
      hi = std::max(hi, x[static_cast<std::size_t>(i)]);
    }
    spread = std::max(spread, hi - lo);
  }
  std::set<std::vector<VertexId>> edges;
  const long long max_b = spread == 0 ? 0 : (side - 1) / spread;
  for (long long b = -max_b; b <= max_b; ++b) {
    if (b == 0) continue;
    // per-coordinate range of a keeping every image point inside [1, n]
    std::vector<long long> lo(static_cast<std::size_t>(dim)), hi(static_cast<std::size_t>(dim));
    bool empty = false;
    for (int i = 0; i < dim; ++i) {
      long long mn = b * config[0][static_cast<std::size_t>(i)], mx = mn;
      for (const auto& x : config) {
        mn = std::min(mn, b * x[static_cast<std::size_t>(i)]);
        mx = std::max(mx, b * x[static_cast<std::size_t>(i)]);
      }
      lo[static_cast<std::size_t>(i)] = 1 - mn;
      hi[static_cast<std::size_t>(i)] = side - mx;
      empty = empty || lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)];
    }
    if (empty) continue;
    std::vector<long long> a = lo;
    while (true) {
      std::vector<VertexId> e;
      for (const auto& x : config) {
        std::vector<long long> y(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i)
          y[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b * x[static_cast<std::size_t>(i)];
        e.push_back(grid_id(y, n));
      }
      std::sort(e.begin(), e.end());
      edges.insert(std::move(e));
      int i = dim - 1;
      while (i >= 0 && a[static_cast<std::size_t>(i)] == hi[static_cast<std::size_t>(i)]) {
        a[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
        --i;
      }
      if (i < 0) break;
      ++a[static_cast<std::size_t>(i)];
    }
  }
  return UniformHypergraph::on_range(static_cast<int>(config.size()), vertices, {edges.begin(), edges.end()});
}

/// Lexicographic 1-based ids of the t-subsets of [n]; the vertex indexing of K_n^t.
class SubsetIndexer {
 public:
  SubsetIndexer(std::size_t n, int t) {
    std::vector<VertexId> ground(n);
    std::iota(ground.begin(), ground.end(), VertexId{1});
    for_each_subset(ground, static_cast<std::size_t>(t), [&](const std::vector<VertexId>& s) {
      VertexId id = static_cast<VertexId>(subsets_.size() + 1);
      subsets_.push_back(s);
      ids_[s] = id;
    });
  }
  std::size_t size() const { return subsets_.size(); }
  VertexId id(const std::vector<VertexId>& sorted_subset) const { return ids_.at(sorted_subset); }
  const std::vector<VertexId>& subset(VertexId id) const { return subsets_.at(id - 1); }

 private:
  std::vector<std::vector<VertexId>> subsets_;
  std::map<std::vector<VertexId>, VertexId> ids_;
};

namespace detail {

/// Calls fn(image) for every injective map [count] -> [n], image[i] = value of i+1.
template <class Fn>
void for_each_injection(std::size_t count, std::size_t n, Fn&& fn) {
  std::vector<VertexId> image;
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (image.size() == count) {
      fn(image);
      return;
    }
    for (VertexId x = 1; x <= n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      image.push_back(x);
      self(self);
      image.pop_back();
      used[x] = 0;
    }
  };
  rec(rec);
}

}  // namespace detail

/// e(Hs)-uniform hypergraph on the t-subsets of [n] whose edges are the edge sets
/// of all copies of Hs in K_n^t. Embeddings with the same image are one copy.
inline UniformHypergraph copies_hypergraph(const SmallGraph& pattern, std::size_t n) {
  if (pattern.edge_count() == 0) throw InputError("pattern needs at least one edge");
  if (n < pattern.vertex_count) throw InputError("need n >= v(pattern)");
  SubsetIndexer index(n, pattern.t);
  std::set<std::vector<VertexId>> copies;
  detail::for_each_injection(pattern.vertex_count, n, [&](const std::vector<VertexId>& phi) {
    std::vector<VertexId> image;
    for (const auto& e : pattern.edges) {
      std::vector<VertexId> mapped;
      for (VertexId v : e) mapped.push_back(phi[v - 1]);
      std::sort(mapped.begin(), mapped.end());
      image.push_back(index.id(mapped));
    }
    std::sort(image.begin(), image.end());
    copies.insert(std::move(image));
  });
  return UniformHypergraph::on_range(static_cast<int>(pattern.edge_count()), index.size(),
                                     {copies.begin(), copies.end()});
}

/// Number of vertex permutations mapping the edge set of g onto itself.
inline std::uint64_t automorphism_count(const SmallGraph& g) {
  std::vector<VertexId> perm(g.vertex_count);
  std::iota(perm.begin(), perm.end(), VertexId{1});
  std::set<std::vector<VertexId>> edges(g.edges.begin(), g.edges.end());
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& e : g.edges) {
      std::vector<VertexId> mapped;
      for (VertexId v : e) mapped.push_back(perm[v - 1]);
      std::sort(mapped.begin(), mapped.end());
      if (!edges.count(mapped)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Id of the pair (x in part i, y in part j) for the q-th edge {i<j} of the
/// pattern, in the complete blow-up with parts of size n: q n^2 + x n + y + 1,
/// with x, y in [0, n).
inline VertexId blowup_vertex_id(std::size_t edge_index, std::size_t x, std::size_t y, std::size_t n) {
  return static_cast<VertexId>(edge_index * n * n + x * n + y + 1);
}

/// e(Hs)-uniform hypergraph on the edges of the complete blow-up Hs(n) whose
/// edges are the canonical copies: vertex i of Hs placed inside part V_i.
/// There is one edge per choice of representatives, n^v(Hs) in total.
inline UniformHypergraph blowup_copies_hypergraph(const SmallGraph& pattern, std::size_t n) {
  if (pattern.t != 2) throw InputError("blow-up needs an ordinary graph (t = 2)");
  if (pattern.edge_count() == 0) throw InputError("pattern needs at least one edge");
  if (n < 1) throw InputError("need n >= 1");
  const std::size_t v = pattern.vertex_count;
  std::vector<WeightedEdge> edges;
  std::vector<std::size_t> choice(v, 0);
  while (true) {
    WeightedEdge e;
    for (std::size_t q = 0; q < pattern.edge_count(); ++q) {
      const auto& pair = pattern.edges[q];
      e.vertices.push_back(blowup_vertex_id(q, choice[pair[0] - 1], choice[pair[1] - 1], n));
    }
    edges.push_back(std::move(e));
    std::size_t i = 0;
    while (i < v && choice[i] == n - 1) choice[i++] = 0;
    if (i == v) break;
    ++choice[i];
  }
  return UniformHypergraph(static_cast<int>(pattern.edge_count()),
                           VertexSet::full(pattern.edge_count() * n * n), std::move(edges));
}

/// m_t: the maximum of (e(H[U]) - 1) / (|U| - t) over vertex subsets U with
/// |U| >= t + 1. Induced subgraphs suffice since adding edges on a fixed vertex
/// set only raises the ratio. A single-edge pattern gives 0.
inline Rational t_density(const SmallGraph& g, int t) {
  if (g.t != t) throw InputError("pattern arity differs from t");
  if (g.vertex_count < static_cast<std::size_t>(t) + 1) throw PreconditionError("t-density needs v >= t + 1");
  if (g.vertex_count > 24) throw LimitExceeded("t-density enumerates 2^v vertex subsets; v is too large");
  bool have = false;
  Rational best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count); ++mask) {
    auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < static_cast<std::size_t>(t) + 1) continue;
    long long inside = 0;
    for (const auto& e : g.edges) {
      bool in = true;
      for (VertexId v : e) in = in && ((mask >> (v - 1)) & 1U);
      inside += in ? 1 : 0;
    }
    Rational value(inside - 1, static_cast<long long>(size) - t);
    if (!have || value > best) {
      best = value;
      have = true;
    }
  }
  return best;
}

/// m_2 of an ordinary graph.
inline Rational two_density(const SmallGraph& g) {
  if (g.t != 2) throw InputError("two_density needs an ordinary graph");
  if (g.vertex_count < 3) throw PreconditionError("two_density needs at least 3 vertices");
  return t_density(g, 2);
}

/// The least c with Delta_ell(H) <= c p^(ell-1) e(H)/v(H) for every ell in [k].
inline Rational minimal_degree_constant(const UniformHypergraph& h, const Rational& p) {
  if (h.edge_count() == 0) throw PreconditionError("minimal_degree_constant needs e(H) >= 1");
  if (p <= 0) throw PreconditionError("p must be positive");
  Rational best = 0;
  Rational ratio(BigInt(h.vertex_count()), BigInt(h.edge_count()));
  for (int ell = 1; ell <= h.uniformity(); ++ell) {
    Rational c = Rational(max_degree(h, ell)) * ratio / pow(p, static_cast<unsigned>(ell - 1));
    if (c > best) best = c;
  }
  return best;
}

}  // namespace hgc
