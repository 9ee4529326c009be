#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "ldc/oracle.hpp"
#include "support.hpp"

namespace ldc {
namespace {

using testing::TestRng;

constexpr CoverVertex c1(Vertex v) { return CoverVertex{v, Side::first}; }
constexpr CoverVertex c2(Vertex v) { return CoverVertex{v, Side::second}; }

double sum(const DenseVector& x) { return std::accumulate(x.begin(), x.end(), 0.0); }

TEST(ExactPagerank, AlphaOneIsIdentity) {
  TestRng rng(1);
  const Graph g = testing::random_connected_graph(6, 0.4, true, rng);
  const DenseVector s = to_dense(g, testing::random_mass(6, 0.5, rng));
  const DenseVector pr = exact_pagerank(g, true, 1.0, s);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(pr[i], s[i]);
}

TEST(ExactPagerank, SingleEdgeSumsToOne) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = Graph::undirected(2, e);
  const DenseVector pr = exact_pagerank(g, true, 0.15, cover_indicator(g, c1(0)));
  EXPECT_NEAR(sum(pr), 1.0, 1e-12);
  // a1 and b2 form a component; a2, b1 never receive mass.
  EXPECT_EQ(pr[c2(0).key()], 0.0);
  EXPECT_EQ(pr[c1(1).key()], 0.0);
}

TEST(ExactPagerank, SumAndLinearity) {
  TestRng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 12;
    const bool directed = trial % 2 == 0;
    const Graph g = testing::random_graph(n, 0.35, directed, true, rng);
    const DenseVector s = to_dense(g, testing::random_mass(n, 0.5, rng));
    const DenseVector t = to_dense(g, testing::random_mass(n, 0.5, rng));
    DenseVector st(s);
    for (std::size_t i = 0; i < st.size(); ++i) st[i] += t[i];
    const double alpha = 0.05 + 0.9 * trial / 30.0;
    const DenseVector a = exact_pagerank(g, true, alpha, s);
    const DenseVector b = exact_pagerank(g, true, alpha, t);
    const DenseVector ab = exact_pagerank(g, true, alpha, st);
    EXPECT_NEAR(sum(a), sum(s), 1e-10);
    for (std::size_t i = 0; i < ab.size(); ++i) EXPECT_NEAR(ab[i], a[i] + b[i], 1e-10);

    const DenseVector base(n, 1.0 / static_cast<double>(n));
    EXPECT_NEAR(sum(exact_pagerank(g, false, alpha, base)), 1.0, 1e-10);
  }
}

TEST(ExactPagerank, FixedPoint) {
  TestRng rng(3);
  const Graph g = testing::random_connected_graph(8, 0.3, true, rng);
  const double alpha = 0.2;
  const DenseVector s = cover_indicator(g, c1(2));
  const DenseVector pr = exact_pagerank(g, true, alpha, s);
  const DenseVector walked = lazy_walk_step(g, pr, true);
  for (std::size_t i = 0; i < pr.size(); ++i) {
    EXPECT_NEAR(pr[i], alpha * s[i] + (1.0 - alpha) * walked[i], 1e-12);
  }
}

TEST(ExactPagerank, Guards) {
  const std::vector<Edge> e{{0, 1}};
  const Graph big = Graph::undirected(kDenseLimit, e);
  EXPECT_THROW(exact_pagerank(big, true, 0.5, DenseVector(2 * kDenseLimit, 0.0)), std::length_error);
  const Graph g = Graph::undirected(2, e);
  EXPECT_THROW(exact_pagerank(g, true, 0.0, DenseVector(4, 0.0)), std::invalid_argument);
  EXPECT_THROW(exact_pagerank(g, true, 0.5, DenseVector(3, 0.0)), std::invalid_argument);
}

TEST(BruteForce, FourCycle) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const BestPair best = brute_force_best_pair(Graph::undirected(4, e));
  EXPECT_EQ(best.beta, 0.0);
  EXPECT_EQ(bipartiteness(Graph::undirected(4, e), best.l, best.r), 0.0);
  EXPECT_TRUE((best.l == VertexSet{0, 2} && best.r == VertexSet{1, 3}) ||
              (best.l == VertexSet{1, 3} && best.r == VertexSet{0, 2}) ||
              best.l.size() + best.r.size() < 4);
}

TEST(BruteForce, Triangle) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  const Graph g = Graph::undirected(3, e);
  const BestPair best = brute_force_best_pair(g);
  EXPECT_DOUBLE_EQ(best.beta, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(bipartiteness(g, VertexSet{0}, VertexSet{1, 2}), 1.0 / 3.0);
  // Several pairs reach the optimum; the enumeration keeps the first one.
  EXPECT_EQ(best.l, (VertexSet{0, 1}));
  EXPECT_EQ(best.r, VertexSet{2});
  EXPECT_DOUBLE_EQ(brute_force_min_conductance(g).phi, 1.0 / 3.0);
}

TEST(BruteForce, MinConductanceEqualsMinBeta) {
  TestRng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph g = testing::random_connected_graph(n, 0.4, trial % 2 == 0, rng);
    const BestPair pair = brute_force_best_pair(g);
    const BestCoverSet set = brute_force_min_conductance(g);
    EXPECT_NEAR(pair.beta, set.phi, 1e-12);
    EXPECT_TRUE(is_simple(set.set));
    // Ties may resolve to different optima; each must map onto an optimum.
    EXPECT_NEAR(conductance_in_cover(g, from_cluster_pair(pair.l, pair.r)), set.phi, 1e-12);
    const SetPair back = to_cluster_pair(set.set);
    EXPECT_NEAR(bipartiteness(g, back.l, back.r), pair.beta, 1e-12);
  }
}

TEST(BruteForce, Guards) {
  const std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(brute_force_best_pair(Graph::undirected(kBruteForceLimit + 1, e)), std::length_error);
  EXPECT_THROW(brute_force_best_pair(Graph::directed(2, e)), std::invalid_argument);
  EXPECT_THROW(brute_force_best_pair(Graph::undirected(3, {})), std::invalid_argument);
}

TEST(Kernel, SingleEdgeByHand) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = Graph::undirected(2, e);
  const auto row = exact_esp_kernel(g, CoverSet{c1(0)});
  ASSERT_EQ(row.size(), 2u);
  EXPECT_TRUE(row[0].next.empty());
  EXPECT_DOUBLE_EQ(row[0].k, 0.5);
  EXPECT_EQ(row[0].k_hat, 0.0);
  EXPECT_EQ(row[1].next, (CoverSet{c1(0), c2(1)}));
  EXPECT_DOUBLE_EQ(row[1].k, 0.5);
  EXPECT_DOUBLE_EQ(row[1].k_hat, 1.0);
}

TEST(Kernel, WholeCoverIsAbsorbing) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
  const Graph g = Graph::directed(3, e);
  std::vector<CoverVertex> all;
  for (std::uint64_t k = 0; k < 6; ++k) all.push_back(CoverVertex::from_key(k));
  const auto row = exact_esp_kernel(g, CoverSet(all));
  ASSERT_EQ(row.size(), 1u);
  EXPECT_EQ(row[0].next, CoverSet(all));
  EXPECT_EQ(row[0].k, 1.0);
  EXPECT_EQ(row[0].k_hat, 1.0);
}

TEST(Kernel, RowsAreDistributionsAndVolumeIsMartingale) {
  TestRng rng(7);
  std::uniform_int_distribution<int> coin(0, 2);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Graph g = testing::random_graph(n, 0.5, trial % 3 != 0, true, rng);
    std::vector<CoverVertex> members;
    for (std::uint64_t k = 0; k < 2 * n; ++k) {
      if (coin(rng) == 0) members.push_back(CoverVertex::from_key(k));
    }
    const CoverSet s(members);
    const double vol = cover_volume(g, s);
    if (vol <= 0.0) continue;
    const auto row = exact_esp_kernel(g, s);
    double k_sum = 0.0;
    double k_hat_sum = 0.0;
    double expected_volume = 0.0;
    for (const KernelEntry& e : row) {
      EXPECT_GE(e.k, 0.0);
      k_sum += e.k;
      k_hat_sum += e.k_hat;
      expected_volume += e.k * cover_volume(g, e.next);
    }
    EXPECT_NEAR(k_sum, 1.0, 1e-10);
    EXPECT_NEAR(k_hat_sum, 1.0, 1e-10);
    EXPECT_NEAR(expected_volume, vol, 1e-10 * vol);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Kernel, MembershipProbabilities) {
  // Path 0 - 1 - 2, S = {1_1}: 1_1 keeps half, and 0_2, 2_2 each reach it
  // with probability 1/2 (one neighbour, half of the walk moves).
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const Graph g = Graph::undirected(3, e);
  const DenseVector q = membership_probabilities(g, CoverSet{c1(1)});
  EXPECT_EQ(q[c1(1).key()], 0.5);
  EXPECT_EQ(q[c2(0).key()], 0.5);
  EXPECT_EQ(q[c2(2).key()], 0.5);
  EXPECT_EQ(q[c2(1).key()], 0.0);
  EXPECT_EQ(q[c1(0).key()], 0.0);
}

TEST(Kernel, Guards) {
  const std::vector<Edge> e{{0, 1}};
  const Graph big = Graph::undirected(kKernelCoverLimit / 2 + 1, e);
  EXPECT_THROW(exact_esp_kernel(big, CoverSet{c1(0)}), std::length_error);
  const Graph g = Graph::undirected(3, e);
  EXPECT_THROW(exact_esp_kernel(g, CoverSet{c1(2)}), std::invalid_argument);
}

TEST(LsCurve, EndpointsConcavityAndUpperBound) {
  TestRng rng(11);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + trial % 10;
    const Graph g = testing::random_connected_graph(n, 0.3, true, rng);
    const AprResult apr = approximate_pagerank_dc(g, 0, 0.1, 1e-3);
    const LsCurve curve(g, apr.p);
    EXPECT_EQ(curve(0.0), 0.0);
    EXPECT_NEAR(curve(curve.total_volume()), apr.p.l1_norm(), 1e-12);
    EXPECT_THROW(curve(-1.0), std::out_of_range);
    EXPECT_THROW(curve(curve.total_volume() + 1.0), std::out_of_range);

    const auto& pts = curve.points();
    double last_slope = INFINITY;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double dx = pts[i].first - pts[i - 1].first;
      ASSERT_GT(dx, 0.0);
      const double slope = (pts[i].second - pts[i - 1].second) / dx;
      EXPECT_LE(slope, last_slope + 1e-12);
      last_slope = slope;
    }

    for (int k = 0; k < 100; ++k) {
      std::vector<CoverVertex> members;
      for (std::uint64_t key = 0; key < 2 * n; ++key) {
        if (coin(rng) == 1) members.push_back(CoverVertex::from_key(key));
      }
      const CoverSet s(members);
      double mass = 0.0;
      for (const CoverVertex& cv : s) mass += apr.p.get(cv);
      EXPECT_LE(mass, curve(cover_volume(g, s)) + 1e-12);
    }
  }
}

TEST(LsCurve, RejectsMassOnIsolatedVertex) {
  const std::vector<Edge> e{{0, 1}};
  MassVector p;
  p.set(c1(2), 1.0);
  EXPECT_THROW(LsCurve(Graph::undirected(3, e), p), std::invalid_argument);
}

}  // namespace
}  // namespace ldc
