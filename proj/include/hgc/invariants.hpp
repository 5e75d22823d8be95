#pragma once

#include <string>
#include <vector>

#include "hgc/containers.hpp"
#include "hgc/scythe.hpp"

namespace hgc {

/// Outcome of one invariant on one scythe invocation. `applicable` is false when
/// the invariant's hypothesis did not hold, in which case `holds` is vacuous.
struct InvariantCheck {
  explicit InvariantCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string detail;
};

/// H_i is level-uniform on V(next), I stays independent in it, and B subset I subset A u B.
inline InvariantCheck check_selection_cover(const ScytheTrace& t) {
  InvariantCheck out("selection_cover");
  const auto& r = t.result;
  VertexSet picked = r.selected_set();
  auto fail = [&](std::string why) {
    out.holds = false;
    out.detail = std::move(why);
    return out;
  };
  if (r.lower.uniformity() != t.level || r.lower.vertices() != t.next.vertices())
    return fail("lower hypergraph has the wrong shape");
  if (!is_independent(r.lower, t.independent)) return fail("I contains an edge of the lower hypergraph");
  if (picked.size() != r.selected.size()) return fail("a vertex was selected twice");
  if (!picked.is_subset_of(t.independent)) return fail("B is not inside I");
  if (!t.independent.is_subset_of(r.available | picked)) return fail("I is not inside A u B");
  if (r.selected.size() > t.params.budget(t.top.vertex_count())) return fail("more than b selections");
  if (r.stopped_early && (!r.available.empty() || r.lower.edge_count() != 0 || picked != t.independent))
    return fail("early stop without A = 0, empty H_i and B = I");
  return out;
}

/// Running the step again with I' = B reproduces (A, B, H_i) exactly.
inline InvariantCheck check_replay(const ScytheTrace& t) {
  InvariantCheck out("replay");
  ScytheResult again = scythe_step(t.next, t.result.selected_set(), t.table, t.params.budget(t.top.vertex_count()),
                                   t.level);
  if (!(again == t.result)) {
    out.holds = false;
    out.detail = "replay on B=" + t.result.selected_set().to_string() + " diverged";
  }
  return out;
}

/// For each ell in [level]: Delta_{ell+1}(next) <= Delta_{ell+1}^{level+1} implies
/// Delta_ell(H_i) <= Delta_ell^level. One entry per ell.
inline std::vector<InvariantCheck> check_degree_inheritance(const ScytheTrace& t) {
  std::vector<InvariantCheck> out;
  for (int ell = 1; ell <= t.level; ++ell) {
    InvariantCheck c("degree_inheritance[ell=" + std::to_string(ell) + "]");
    const bool small_enough = t.next.vertex_count() >= static_cast<std::size_t>(ell + 1);
    c.applicable =
        !small_enough || Rational(max_degree(t.next, ell + 1)) <= t.table.at(ell + 1, t.level + 1);
    if (c.applicable && t.result.lower.vertex_count() >= static_cast<std::size_t>(ell)) {
      auto d = max_degree(t.result.lower, ell);
      if (Rational(d) > t.table.at(ell, t.level)) {
        c.holds = false;
        c.detail = "Delta_" + std::to_string(ell) + "(H_i) = " + std::to_string(d) + " > " +
                   to_string(t.table.at(ell, t.level));
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// If e(next) >= c_{level+1} p^{k-level-1} e(H) and Delta_ell(next) <= Delta_ell^{level+1}
/// for all ell, then e(H_i) >= c_level p^{k-level} e(H) or |A_i| <= (1 - c_level) v(H).
inline InvariantCheck check_growth_dichotomy(const ScytheTrace& t) {
  InvariantCheck out("growth_dichotomy");
  const int k = t.params.k;
  const int i = t.level;
  const auto e_top = static_cast<unsigned long long>(t.top.edge_count());
  const auto v_top = static_cast<unsigned long long>(t.top.vertex_count());
  Rational needed_next = t.params.level_constant(i + 1) * pow(t.params.p, static_cast<unsigned>(k - i - 1)) * e_top;
  out.applicable = Rational(static_cast<unsigned long long>(t.next.edge_count())) >= needed_next;
  for (int ell = 1; ell <= i + 1 && out.applicable; ++ell)
    if (t.next.vertex_count() >= static_cast<std::size_t>(ell))
      out.applicable = Rational(max_degree(t.next, ell)) <= t.table.at(ell, i + 1);
  if (!out.applicable) return out;
  const Rational ci = t.params.level_constant(i);
  bool grew = Rational(static_cast<unsigned long long>(t.result.lower.edge_count())) >=
              ci * pow(t.params.p, static_cast<unsigned>(k - i)) * e_top;
  bool shrank = Rational(static_cast<unsigned long long>(t.result.available.size())) <= (1 - ci) * v_top;
  if (!grew && !shrank) {
    out.holds = false;
    out.detail = "e(H_i) = " + std::to_string(t.result.lower.edge_count()) + " and |A_i| = " +
                 std::to_string(t.result.available.size()) + " at level " + std::to_string(i);
  }
  return out;
}

/// Every scythe invariant for one trace.
inline std::vector<InvariantCheck> check_scythe_invariants(const ScytheTrace& t, bool with_replay = true) {
  std::vector<InvariantCheck> out{check_selection_cover(t)};
  if (with_replay) out.push_back(check_replay(t));
  for (auto& c : check_degree_inheritance(t)) out.push_back(std::move(c));
  out.push_back(check_growth_dichotomy(t));
  return out;
}

/// Tallies invariant outcomes across many traces; plug `observer()` into BuildOptions.
class InvariantTally {
 public:
  struct Count {
    std::uint64_t applicable = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
  };

  explicit InvariantTally(bool with_replay = true) : with_replay_(with_replay) {}

  ScytheObserver observer() {
    return [this](const ScytheTrace& t) {
      ++traces_;
      for (const auto& c : check_scythe_invariants(t, with_replay_)) {
        // collapse the per-ell entries into one row
        std::string key = c.name.substr(0, c.name.find('['));
        auto& n = counts_[key];
        if (!c.applicable) {
          ++n.vacuous;
          continue;
        }
        ++n.applicable;
        if (!c.holds && n.violations++ == 0) n.first_violation = c.detail;
      }
    };
  }

  std::uint64_t traces() const { return traces_; }
  const std::map<std::string, Count>& counts() const { return counts_; }
  std::uint64_t violations() const {
    std::uint64_t total = 0;
    for (const auto& [name, c] : counts_) total += c.violations;
    return total;
  }

 private:
  bool with_replay_;
  std::uint64_t traces_ = 0;
  std::map<std::string, Count> counts_;
};

}  // namespace hgc
