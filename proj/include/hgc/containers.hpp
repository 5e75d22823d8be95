#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hgc/errors.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/oracle.hpp"
#include "hgc/rational.hpp"
#include "hgc/scythe.hpp"

namespace hgc {

/// Constants of one fingerprint computation, all exact.
struct PropParams {
  Rational c;
  Rational p;
  int k = 1;

  /// c k 2^(k+1)
  Rational base() const { return c * k * pow(Rational(2), static_cast<unsigned>(k + 1)); }
  /// (c k 2^(k+1))^(-k)
  Rational delta() const { return 1 / pow(base(), static_cast<unsigned>(k)); }
  /// c_i = (c k 2^(k+1))^(i-k); c_k = 1.
  Rational level_constant(int i) const {
    if (i < 1 || i > k) throw InputError("level constant index out of range");
    return 1 / pow(base(), static_cast<unsigned>(k - i));
  }
  /// b = ceil(p v)
  std::size_t budget(std::size_t v) const {
    return static_cast<std::size_t>(hgc::ceil(p * static_cast<unsigned long long>(v)));
  }
};

/// Increasing family F of vertex sets, given by a membership predicate.
struct DensityFamily {
  std::function<bool(const VertexSet&)> member;
  Rational epsilon;
  /// Declared: A in F implies |A| >= min_fraction * v(H).
  Rational min_fraction;
  std::string description;
};

/// F_s = { A : |A| >= s }.
inline DensityFamily min_size_family(std::size_t v, std::size_t s, Rational epsilon) {
  if (epsilon <= 0 || epsilon > 1) throw InputError("epsilon must lie in (0,1], got " + to_string(epsilon));
  if (v == 0) throw InputError("min-size family over an empty vertex set");
  const Rational fraction = Rational(BigInt(s), BigInt(v));
  if (fraction < epsilon)
    throw PreconditionError("min-size:" + std::to_string(s) + " has members of size below eps * v(H)");
  return {[s](const VertexSet& a) { return a.size() >= s; }, std::move(epsilon), fraction,
          "min-size:" + std::to_string(s)};
}

/// A fingerprint together with the pieces it was assembled from, in order.
struct Fingerprint {
  VertexSet vertices;
  std::vector<std::vector<VertexId>> parts;

  bool operator==(const Fingerprint&) const = default;
};

/// Everything one scythe invocation saw, for invariant checks.
struct ScytheTrace {
  const UniformHypergraph& top;
  const UniformHypergraph& next;
  const VertexSet& independent;
  const ThresholdTable& table;
  const PropParams& params;
  int level;
  const ScytheResult& result;
};

using ScytheObserver = std::function<void(const ScytheTrace&)>;

struct PropResult {
  Fingerprint fingerprint;
  VertexSet container;
  /// The level at which the descent stopped; 0 when it ran through level 1.
  int stop_level = 0;
};

namespace detail {

inline void check_degree_condition(const UniformHypergraph& h, const PropParams& params) {
  const Rational ratio(BigInt(h.edge_count()), BigInt(h.vertex_count()));
  for (int ell = 1; ell <= h.uniformity(); ++ell) {
    if (h.vertex_count() < static_cast<std::size_t>(ell)) break;
    Rational bound = params.c * pow(params.p, static_cast<unsigned>(ell - 1)) * ratio;
    if (Rational(max_degree(h, ell)) > bound)
      throw PreconditionError("degree condition fails at ell=" + std::to_string(ell) + ": Delta_" +
                              std::to_string(ell) + " = " + std::to_string(max_degree(h, ell)) + " > " +
                              to_string(bound));
  }
}

}  // namespace detail

/// g0(I) and f0(g0(I)) for one independent set, descending one uniformity at a time.
inline PropResult prop_fingerprint(const UniformHypergraph& h, const VertexSet& independent, const Rational& c,
                                   const Rational& p, const ScytheObserver& observer = {}) {
  if (h.edge_count() == 0) throw PreconditionError("fingerprint needs e(H) >= 1");
  if (p <= 0 || p >= 1) throw PreconditionError("p must lie in (0,1), got " + to_string(p));
  if (c <= 0) throw PreconditionError("c must be positive");
  detail::require_within(h, independent, "I");
  const PropParams params{c, p, h.uniformity()};
  detail::check_degree_condition(h, params);
  if (!is_independent(h, independent)) throw ContractError("fingerprint requested for a dependent set");

  const std::size_t v = h.vertex_count();
  PropResult out{{VertexSet(h.capacity()), {}}, VertexSet(h.capacity()), 0};
  if (h.uniformity() == 1) {
    // nothing to select; the container is every vertex outside all edges
    out.container = h.vertices();
    for (std::size_t i = 0; i < h.distinct_edge_count(); ++i) out.container.erase(h.edge(i)[0]);
    return out;
  }

  const ThresholdTable table(h, p);
  const std::size_t budget = params.budget(v);
  const Rational shrink_limit = (1 - params.delta()) * static_cast<unsigned long long>(v);
  UniformHypergraph next = h;
  for (int level = h.uniformity() - 1; level >= 1; --level) {
    ScytheResult res = scythe_step(next, independent, table, budget, level);
    if (observer) observer(ScytheTrace{h, next, independent, table, params, level, res});
    for (VertexId u : res.selected) out.fingerprint.vertices.insert(u);
    out.fingerprint.parts.push_back(res.selected);
    if (Rational(static_cast<unsigned long long>(res.available.size())) <= shrink_limit) {
      out.container = std::move(res.available);
      out.stop_level = level;
      return out;
    }
    next = std::move(res.lower);
  }
  out.container = h.vertices();
  for (std::size_t i = 0; i < next.distinct_edge_count(); ++i) out.container.erase(next.edge(i)[0]);
  return out;
}

/// C = (k-1)((1/delta) L + 1) with delta built from c/eps and L an upper bound on ln(1/eps).
inline Rational container_size_constant(int k, const Rational& c, const Rational& eps) {
  PropParams inner{c / eps, Rational(1, 2), k};
  return (k - 1) * (ln_upper_bound(1 / eps) / inner.delta() + 1);
}

/// Most rounds the construction may take before density must have failed.
inline BigInt container_round_cap(int k, const Rational& c, const Rational& eps) {
  PropParams inner{c / eps, Rational(1, 2), k};
  return hgc::ceil(ln_upper_bound(1 / eps) / inner.delta()) + 1;
}

struct BuildOptions {
  /// Re-check the size floor and the density inequality at every A_j in F.
  bool verify_density = true;
  /// Return the trivial container (empty, V) for an edgeless hypergraph instead of refusing.
  bool allow_edgeless = false;
  ScytheObserver observer;
};

struct Container {
  Fingerprint fingerprint;
  VertexSet container;
  std::size_t rounds = 0;
};

/// g(I) and f(g(I)): repeatedly fingerprint I inside the current set while it stays in F.
inline Container build_container(const UniformHypergraph& h, const VertexSet& independent, const DensityFamily& family,
                                 const Rational& c, const Rational& p, const BuildOptions& options = {}) {
  detail::require_within(h, independent, "I");
  if (h.edge_count() == 0) {
    if (!options.allow_edgeless) throw PreconditionError("container construction needs e(H) >= 1");
    return {{VertexSet(h.capacity()), {}}, h.vertices(), 0};
  }
  if (family.epsilon <= 0 || family.epsilon > 1) throw PreconditionError("epsilon must lie in (0,1]");
  if (!is_independent(h, independent)) throw ContractError("container requested for a dependent set");

  const Rational inner_c = c / family.epsilon;
  const BigInt cap = container_round_cap(h.uniformity(), c, family.epsilon);
  const auto v = static_cast<unsigned long long>(h.vertex_count());
  Container out{{VertexSet(h.capacity()), {}}, h.vertices(), 0};
  while (family.member(out.container)) {
    const auto size = static_cast<unsigned long long>(out.container.size());
    if (Rational(size) < family.min_fraction * v)
      throw PreconditionError("family member of size " + std::to_string(size) + " is below its declared floor");
    if (BigInt(out.rounds) >= cap) throw DensityViolation("round cap " + cap.str() + " exceeded; H is not dense enough");
    UniformHypergraph sub = induced(h, out.container);
    if (options.verify_density) {
      if (Rational(size) < family.epsilon * v)
        throw DensityViolation("member " + out.container.to_string() + " has fewer than eps * v(H) vertices");
      if (Rational(static_cast<unsigned long long>(sub.edge_count())) <
          family.epsilon * static_cast<unsigned long long>(h.edge_count()))
        throw DensityViolation("member " + out.container.to_string() + " spans " +
                               std::to_string(sub.edge_count()) + " edges, below eps * e(H)");
    }
    PropResult step;
    try {
      step = prop_fingerprint(sub, independent & out.container, inner_c, p, options.observer);
    } catch (const DensityViolation&) {
      throw;
    } catch (const PreconditionError& e) {
      throw DensityViolation(std::string("inner fingerprint precondition failed: ") + e.what());
    }
    out.fingerprint.vertices |= step.fingerprint.vertices;
    out.fingerprint.parts.push_back(step.fingerprint.vertices.ids());
    out.container = std::move(step.container);
    ++out.rounds;
  }
  return out;
}

/// The family S with f, stored as fingerprint -> container records.
struct ContainerMap {
  int k = 1;
  std::size_t capacity = 0;
  Rational p, c, eps, C;
  std::string family;
  std::map<VertexSet, VertexSet> records;

  bool operator==(const ContainerMap&) const = default;
};

/// Builds containers for every supplied independent set and merges them by fingerprint.
inline ContainerMap build_container_family(const UniformHypergraph& h, const DensityFamily& family, const Rational& c,
                                           const Rational& p, const std::vector<VertexSet>& witnesses,
                                           const BuildOptions& options = {}) {
  ContainerMap map{h.uniformity(), h.capacity(), p, c, family.epsilon,
                   container_size_constant(h.uniformity(), c, family.epsilon), family.description, {}};
  for (const auto& witness : witnesses) {
    Container built = build_container(h, witness, family, c, p, options);
    auto [it, fresh] = map.records.emplace(built.fingerprint.vertices, built.container);
    if (!fresh && it->second != built.container)
      throw ContractError("fingerprint " + it->first.to_string() + " maps to both " + it->second.to_string() +
                          " and " + built.container.to_string());
  }
  return map;
}

/// Witness sources accepted by the family builder.
enum class WitnessSource { all, maximal_closure };

/// The independent sets to build from. maximal-closure adds, to the maximal
/// independent sets, every fingerprint they produce (closed under g).
inline std::vector<VertexSet> witness_sets(const UniformHypergraph& h, WitnessSource source,
                                           const DensityFamily& family, const Rational& c, const Rational& p,
                                           ExhaustiveLimit limit = {}) {
  if (source == WitnessSource::all) return independent_sets(h, std::nullopt, limit);
  auto out = maximal_independent_sets(h, limit);
  std::vector<VertexSet> extra;
  for (const auto& set : out) extra.push_back(build_container(h, set, family, c, p).fingerprint.vertices);
  out.insert(out.end(), extra.begin(), extra.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Sum over records of binom(|f_S|, m - |S|).
inline BigInt container_count_bound(const ContainerMap& map, long long m) {
  if (m < 0) throw InputError("m must be nonnegative");
  BigInt total = 0;
  for (const auto& [s, f] : map.records) {
    long long rest = m - static_cast<long long>(s.size());
    if (rest < 0 || rest > static_cast<long long>(f.size())) continue;
    total += exact_binomial(static_cast<long long>(f.size()), rest);
  }
  return total;
}

struct ContractResult {
  explicit ContractResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
    passed = false;
  }
};

struct VerifyReport {
  std::vector<ContractResult> contracts;

  bool passed() const {
    for (const auto& c : contracts)
      if (!c.passed) return false;
    return true;
  }
  const ContractResult& at(const std::string& name) const {
    for (const auto& c : contracts)
      if (c.name == name) return c;
    throw InputError("no contract named " + name);
  }
};

struct ConsistencyOptions {
  std::size_t full_pairs_up_to = 5000;
  std::uint64_t sampled_pairs = 1000000;
  std::uint64_t seed = 1;
};

/// Checks: g(I) subset of I' and g(I') subset of I imply equal fingerprints and containers.
/// All pairs when there are few sets, otherwise seeded random pairs.
inline ContractResult check_pairwise_consistency(const std::vector<VertexSet>& sets,
                                                 const std::vector<Container>& built,
                                                 const ConsistencyOptions& options = {}) {
  ContractResult out("pairwise_consistency");
  auto test = [&](std::size_t a, std::size_t b) {
    const auto& ga = built[a].fingerprint.vertices;
    const auto& gb = built[b].fingerprint.vertices;
    if (!ga.is_subset_of(sets[b]) || !gb.is_subset_of(sets[a])) {
      ++out.checked;
      return;
    }
    out.record(ga == gb && built[a].container == built[b].container,
               "I=" + sets[a].to_string() + " and I'=" + sets[b].to_string() + " disagree");
  };
  if (sets.size() <= options.full_pairs_up_to) {
    for (std::size_t a = 0; a < sets.size(); ++a)
      for (std::size_t b = a + 1; b < sets.size(); ++b) test(a, b);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
    for (std::uint64_t i = 0; i < options.sampled_pairs; ++i) {
      std::size_t a = pick(rng), b = pick(rng);
      test(a, b);
    }
  }
  return out;
}

/// Checks every container contract of `map` against H, F and the witnesses.
inline VerifyReport verify_containers(const UniformHypergraph& h, const ContainerMap& map,
                                      const DensityFamily& family, const std::vector<VertexSet>& witnesses,
                                      const ConsistencyOptions& consistency = {}) {
  VerifyReport report;
  ContractResult cover("cover"), avoid("container_outside_family"), size("fingerprint_size"),
      idempotent("idempotence"), determinism("determinism");

  const Rational size_bound = map.C * map.p * static_cast<unsigned long long>(h.vertex_count());
  for (const auto& [s, f] : map.records) {
    avoid.record(!family.member(f), "container " + f.to_string() + " of " + s.to_string() + " lies in F");
    size.record(Rational(static_cast<unsigned long long>(s.size())) <= size_bound,
                "fingerprint " + s.to_string() + " exceeds C p v(H)");
    bool ok = false;
    std::string why = "fingerprint " + s.to_string() + " is not independent";
    if (s.capacity() == h.capacity() && s.is_subset_of(h.vertices()) && is_independent(h, s)) {
      Container again = build_container(h, s, family, map.c, map.p);
      ok = again.fingerprint.vertices == s && again.container == f;
      why = "record " + s.to_string() + " rebuilds to " + again.fingerprint.vertices.to_string() + " -> " +
            again.container.to_string();
    }
    idempotent.record(ok, why);
  }

  std::vector<Container> built;
  built.reserve(witnesses.size());
  for (const auto& witness : witnesses) {
    Container first = build_container(h, witness, family, map.c, map.p);
    Container second = build_container(h, witness, family, map.c, map.p);
    determinism.record(first.fingerprint == second.fingerprint && first.container == second.container,
                       "two builds of " + witness.to_string() + " differ");
    auto it = map.records.find(first.fingerprint.vertices);
    if (it == map.records.end()) {
      cover.record(false, "fingerprint " + first.fingerprint.vertices.to_string() + " of " + witness.to_string() +
                              " is missing from the map");
    } else {
      bool ok = it->first.is_subset_of(witness) && (witness - it->first).is_subset_of(it->second);
      cover.record(ok, "I=" + witness.to_string() + " is not covered by " + it->first.to_string() + " -> " +
                           it->second.to_string());
      if (ok && it->second != first.container)
        determinism.record(false, "stored container of " + it->first.to_string() + " differs from a rebuild");
    }
    built.push_back(std::move(first));
  }

  report.contracts = {cover, avoid, size, idempotent, determinism,
                      check_pairwise_consistency(witnesses, built, consistency)};
  return report;
}

}  // namespace hgc
