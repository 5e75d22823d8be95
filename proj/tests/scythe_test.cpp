#include <gtest/gtest.h>

#include "brute_scythe.hpp"
#include "hgc/instances.hpp"
#include "hgc/oracle.hpp"
#include "hgc/scythe.hpp"

using namespace hgc;

namespace {

brute::Edges to_brute(const UniformHypergraph& h) {
  brute::Edges out;
  for (std::size_t i = 0; i < h.distinct_edge_count(); ++i)
    for (std::uint64_t m = 0; m < h.multiplicity(i); ++m) out.emplace_back(h.edge(i).begin(), h.edge(i).end());
  return out;
}

brute::Set ids(const VertexSet& s) {
  auto v = s.ids();
  return {v.begin(), v.end()};
}

/// Compares every level of the library against the naive rendering, descending
/// from the top for every independent set.
void compare_descent(const UniformHypergraph& h, const Rational& p) {
  const int k = h.uniformity();
  const auto n = static_cast<int>(h.capacity());
  ThresholdTable table(h, p);
  std::vector<brute::Q> top;
  for (int ell = 1; ell <= k; ++ell) top.emplace_back(brute::max_degree(to_brute(h), n, ell));
  auto naive_table = brute::thresholds(top, p);
  for (int level = 1; level <= k; ++level)
    for (int ell = 1; ell <= level; ++ell) ASSERT_EQ(table.at(ell, level), naive_table[level][ell]);

  const auto budget = static_cast<std::size_t>(hgc::ceil(p * static_cast<unsigned long long>(h.vertex_count())));
  brute::Set vertices = ids(h.vertices());
  std::size_t compared = 0;
  for_each_independent_set(h, [&](const VertexSet& independent) {
    UniformHypergraph next = h;
    for (int level = k - 1; level >= 1; --level) {
      auto got = scythe_step(next, independent, table, budget, level);
      auto want = brute::scythe(vertices, to_brute(next), ids(independent), naive_table, budget, level);
      ASSERT_EQ(ids(got.available), want.available) << independent.to_string() << " level " << level;
      ASSERT_EQ(brute::Set(got.selected.begin(), got.selected.end()), want.selected);
      ASSERT_EQ(to_brute(got.lower), want.lower);
      ASSERT_EQ(got.stopped_early, want.stopped);
      ++compared;
      next = got.lower;
    }
  });
  EXPECT_GT(compared, 0u);
}

}  // namespace

TEST(ThresholdTable, HandExample) {
  ThresholdTable t({Rational(4), Rational(2), Rational(1)}, Rational(1, 2));
  EXPECT_EQ(t.at(1, 3), 4);
  EXPECT_EQ(t.at(2, 2), 2);
  EXPECT_EQ(t.at(1, 2), 4);
  EXPECT_EQ(t.at(1, 1), 4);
  EXPECT_EQ(t.high_degree_floor(1, 1), 2);
  EXPECT_THROW(t.at(3, 2), InputError);
}

TEST(ThresholdTable, BaseRowAndMonotoneInP) {
  auto h = ap_hypergraph(9, 3);
  ThresholdTable low(h, Rational(1, 5)), high(h, Rational(2, 3));
  for (int ell = 1; ell <= 3; ++ell) EXPECT_EQ(low.at(ell, 3), Rational(max_degree(h, ell)));
  for (int level = 1; level <= 3; ++level)
    for (int ell = 1; ell <= level; ++ell) EXPECT_LE(low.at(ell, level), high.at(ell, level));
  EXPECT_THROW(ThresholdTable(h, Rational(1)), PreconditionError);
  EXPECT_THROW(ThresholdTable(h, Rational(0)), PreconditionError);
}

TEST(MaxDegreeOrder, EdgelessIsAscending) {
  UniformHypergraph g(2, VertexSet::full(5), {});
  EXPECT_EQ(max_degree_order(g, g.vertices()).order, (std::vector<VertexId>{1, 2, 3, 4, 5}));
}

TEST(MaxDegreeOrder, Path) {
  auto g = UniformHypergraph::on_range(2, 4, {{1, 2}, {2, 3}, {3, 4}});
  auto order = max_degree_order(g, g.vertices());
  EXPECT_EQ(order.order, (std::vector<VertexId>{2, 3, 1, 4}));
  EXPECT_EQ(order.prefix_through(1, 4).ids(), (std::vector<VertexId>{1, 2, 3}));
}

TEST(MaxDegreeOrder, EachPickBeatsTheAverage) {
  auto g = ap_hypergraph(11, 3);
  auto order = max_degree_order(g, g.vertices()).order;
  VertexSet rest = g.vertices();
  for (VertexId u : order) {
    auto sub = induced(g, rest);
    // deg(u) * |rest| >= k * e(rest)
    EXPECT_GE(degree(sub, VertexSet::of(g.capacity(), {u})) * rest.size(), 3 * sub.edge_count());
    rest.erase(u);
  }
}

TEST(HighDegreeSets, Examples) {
  ThresholdTable t({Rational(2), Rational(1)}, Rational(1, 2));  // Delta_1^1 = 2
  UniformHypergraph g(1, VertexSet::full(3), {{{2}, 1}, {{3}, 1}});
  EXPECT_EQ(high_degree_sets(g, 1, t, 1), (std::vector<std::vector<VertexId>>{{2}, {3}}));
  UniformHypergraph empty(1, VertexSet::full(3), {});
  EXPECT_TRUE(high_degree_sets(empty, 1, t, 1).empty());
  UniformHypergraph heavy(2, VertexSet::full(3), {{{1, 3}, 9}});  // Delta_2^2 = 18
  ThresholdTable t3({Rational(9), Rational(9), Rational(9)}, Rational(1, 2));
  EXPECT_EQ(high_degree_sets(heavy, 2, t3, 2), (std::vector<std::vector<VertexId>>{{1, 3}}));
  EXPECT_THROW(high_degree_sets(heavy, 3, t3, 2), InputError);
}

TEST(HighDegreeSets, ZeroThresholdTakesEverySubset) {
  ThresholdTable t({Rational(0), Rational(0)}, Rational(1, 2));
  UniformHypergraph g(1, VertexSet::full(3), {});
  EXPECT_EQ(high_degree_sets(g, 1, t, 1).size(), 3u);
}

TEST(ScytheStep, EmptyIndependentSetStopsAtOnce) {
  auto h = ap_hypergraph(6, 3);
  ThresholdTable t(h, Rational(1, 2));
  auto r = scythe_step(h, VertexSet(6), t, 3, 2);
  EXPECT_TRUE(r.stopped_early);
  EXPECT_TRUE(r.selected.empty());
  EXPECT_TRUE(r.available.empty());
  EXPECT_EQ(r.lower.edge_count(), 0u);
}

TEST(ScytheStep, TriangleHandTrace) {
  auto k3 = UniformHypergraph::on_range(2, 3, {{1, 2}, {1, 3}, {2, 3}});
  ThresholdTable t(k3, Rational(1, 2));
  EXPECT_EQ(t.at(1, 1), 2);
  auto r = scythe_step(k3, VertexSet::of(3, {1}), t, 2, 1);
  EXPECT_EQ(r.selected, std::vector<VertexId>{1});
  EXPECT_TRUE(r.stopped_early);
  EXPECT_TRUE(r.available.empty());
  EXPECT_EQ(r.lower.edge_count(), 0u);
}

TEST(ScytheStep, EdgelessTakesSmallestElements) {
  UniformHypergraph h(2, VertexSet::full(8), {});
  ThresholdTable t({Rational(0), Rational(0)}, Rational(1, 2));
  auto r = scythe_step(h, VertexSet::of(8, {2, 5, 7}), t, 2, 1);
  EXPECT_EQ(r.selected, (std::vector<VertexId>{2, 5}));
  EXPECT_EQ(r.available.ids(), (std::vector<VertexId>{6, 7, 8}));
  EXPECT_EQ(r.lower.edge_count(), 0u);
  EXPECT_FALSE(r.stopped_early);
}

TEST(ScytheStep, RejectsBadInput) {
  auto h = ap_hypergraph(6, 3);
  ThresholdTable t(h, Rational(1, 2));
  EXPECT_THROW(scythe_step(h, VertexSet::of(6, {1, 2, 3}), t, 2, 2), ContractError);
  EXPECT_THROW(scythe_step(h, VertexSet(6), t, 2, 1), InputError);
  EXPECT_THROW(scythe_step(h, VertexSet(6), t, 0, 2), InputError);
}

TEST(ScytheStep, MatchesNaiveRenderingOnAps) {
  compare_descent(ap_hypergraph(9, 3), Rational(1, 3));
  compare_descent(ap_hypergraph(10, 3), Rational(1, 4));
  compare_descent(ap_hypergraph(10, 4), Rational(1, 3));
}

TEST(ScytheStep, MatchesNaiveRenderingOnMultigraphs) {
  UniformHypergraph h(3, VertexSet::full(7),
                      {{{1, 2, 3}, 2}, {{1, 4, 5}, 1}, {{2, 4, 6}, 3}, {{3, 5, 7}, 1}, {{1, 6, 7}, 2}, {{2, 5, 7}, 1}});
  compare_descent(h, Rational(1, 2));
  compare_descent(copies_hypergraph(graphs::complete(3), 5), Rational(1, 3));
}

TEST(ScytheStep, Deterministic) {
  auto h = ap_hypergraph(12, 3);
  ThresholdTable t(h, Rational(1, 4));
  auto i = VertexSet::of(12, {1, 2, 4, 5, 10, 11});
  EXPECT_EQ(scythe_step(h, i, t, 3, 2), scythe_step(h, i, t, 3, 2));
}
