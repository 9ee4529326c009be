#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "ldc/esp.hpp"
#include "ldc/generators.hpp"
#include "ldc/oracle.hpp"
#include "support.hpp"

namespace ldc {
namespace {

using testing::TestRng;

constexpr CoverVertex c1(Vertex v) { return CoverVertex{v, Side::first}; }
constexpr CoverVertex c2(Vertex v) { return CoverVertex{v, Side::second}; }

CoverSet whole_cover(std::size_t n) {
  std::vector<CoverVertex> all;
  for (std::uint64_t k = 0; k < 2 * n; ++k) all.push_back(CoverVertex::from_key(k));
  return CoverSet(all);
}

// Random digraph where every vertex has an out- and an in-arc.
Graph strong_digraph(std::size_t n, double density, TestRng& rng) {
  auto edges = testing::random_edges(n, density, true, true, rng);
  for (Vertex v = 0; v < n; ++v) edges.push_back(Edge{v, static_cast<Vertex>((v + 1) % n), 1.0});
  return Graph::directed(n, edges);
}

TEST(EvoCutSteps, Formula) {
  EXPECT_EQ(evo_cut_steps(1.0), 1u);
  EXPECT_EQ(evo_cut_steps(1e-3), 1u);
  EXPECT_EQ(evo_cut_steps(1e-6), 100u);
  EXPECT_EQ(evo_cut_steps(1e-9), 10000u);
  EXPECT_THROW(evo_cut_steps(0.0), std::invalid_argument);
  EXPECT_THROW(evo_cut_steps(1.5), std::invalid_argument);
}

TEST(EspState, AbsorbingWholeCover) {
  TestRng rng(1);
  const Graph g = strong_digraph(6, 0.3, rng);
  EspState state(g, whole_cover(6), rng);
  for (int t = 0; t < 50; ++t) {
    state.step(rng);
    ASSERT_EQ(state.current_set(), whole_cover(6));
  }
}

TEST(EspState, LazyRetention) {
  // Directed 3-cycle: the cover is the 6-cycle 0_1 1_2 1_1 2_2 2_1 0_2.
  // In S = {0_1, 1_2, 1_1}, 1_2 has both cover neighbours inside.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
  const Graph g = Graph::directed(3, e);
  TestRng rng(2);
  const CoverSet s{c1(0), c2(1), c1(1)};
  for (int trial = 0; trial < 200; ++trial) {
    EspState state(g, s, rng);
    EXPECT_EQ(state.membership_probability(c2(1)), 1.0);
    state.step(rng);
    EXPECT_TRUE(state.contains(c2(1)));
  }
}

TEST(GenerateSample, ZeroStepsReturnsSeed) {
  TestRng rng(3);
  const Graph g = strong_digraph(5, 0.3, rng);
  const EspSample s = generate_sample(g, c2(3), 0, rng);
  EXPECT_EQ(s.final_set, CoverSet{c2(3)});
  EXPECT_EQ(s.steps, 0u);
}

TEST(EspState, RejectsZeroDegreeSeed) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = Graph::directed(2, e);
  EXPECT_THROW(EspState(g, c2(0)), std::invalid_argument);
  TestRng rng(4);
  EXPECT_THROW(EspState(g, CoverSet{c2(0), c1(1)}, rng), std::invalid_argument);
}

TEST(EspState, CouplingOneHopGrowthAndCachedQ) {
  TestRng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const Graph g = trial % 2 == 0 ? strong_digraph(n, 0.25, rng)
                                   : testing::random_connected_graph(n, 0.3, true, rng);
    EspState state(g, c1(0));
    for (int t = 0; t < 60; ++t) {
      const CoverSet before = state.current_set();
      const DenseVector q = membership_probabilities(g, before);
      for (std::uint64_t k = 0; k < 2 * n; ++k) {
        const CoverVertex y = CoverVertex::from_key(k);
        ASSERT_NEAR(state.membership_probability(y), q[k], 1e-12);
        ASSERT_GE(q[k], 0.0);
        ASSERT_LE(q[k], 1.0);
      }
      state.step(rng);
      ASSERT_TRUE(state.contains(state.walker()));
      for (const CoverVertex& y : state.current_set()) {
        // Members of S_t have Q(y, S_{t-1}) > 0, so they lie in S_{t-1} or touch it.
        ASSERT_GT(q[y.key()], 0.0);
      }
      ASSERT_NEAR(state.set_volume(), cover_volume(g, state.current_set()), 1e-9);
      if (state.current_set().empty()) break;
    }
  }
}

TEST(EspState, ConductanceMatchesCover) {
  TestRng rng(6);
  const Graph g = strong_digraph(10, 0.2, rng);
  EspState state(g, c1(0));
  for (int t = 0; t < 30; ++t) {
    state.step(rng);
    const auto phi = state.conductance();
    const CoverSet s = state.current_set();
    const double vol = cover_volume(g, s);
    if (!phi) {
      EXPECT_TRUE(vol <= 0.0 || vol >= cover_total_volume(g));
      continue;
    }
    EXPECT_NEAR(*phi, conductance_in_cover(g, s), 1e-12);
  }
}

TEST(GenerateSample, Deterministic) {
  TestRng g_rng(7);
  const Graph g = strong_digraph(30, 0.1, g_rng);
  Rng a(99);
  Rng b(99);
  const EspSample x = generate_sample(g, c1(4), 80, a);
  const EspSample y = generate_sample(g, c1(4), 80, b);
  EXPECT_EQ(x.final_set, y.final_set);
  EXPECT_EQ(x.min_set, y.min_set);
  EXPECT_EQ(x.min_conductance, y.min_conductance);
}

// Empirical one-step frequencies against the exact volume-biased kernel.
TEST(EspState, KernelAgreementSmall) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {0, 3, 2.0}, {3, 1}};
  const Graph g = Graph::directed(4, e);
  const CoverSet s{c1(0), c2(1)};
  std::map<std::vector<std::uint64_t>, double> exact;
  for (const KernelEntry& k : exact_esp_kernel(g, s)) {
    std::vector<std::uint64_t> keys;
    for (const CoverVertex& cv : k.next) keys.push_back(cv.key());
    exact[keys] += k.k_hat;
  }
  constexpr int kSamples = 20000;
  std::map<std::vector<std::uint64_t>, double> seen;
  Rng rng(8);
  for (int i = 0; i < kSamples; ++i) {
    EspState state(g, s, rng);
    state.step(rng);
    std::vector<std::uint64_t> keys;
    for (const CoverVertex& cv : state.current_set()) keys.push_back(cv.key());
    seen[keys] += 1.0 / kSamples;
  }
  double tv = 0.0;
  for (const auto& [k, p] : exact) tv += std::abs(p - (seen.count(k) ? seen.at(k) : 0.0));
  for (const auto& [k, p] : seen) {
    if (!exact.count(k)) tv += p;
  }
  tv /= 2.0;
  EXPECT_LE(tv, 0.02);
}

TEST(EvoCut, OutputContract) {
  TestRng rng(9);
  std::uniform_real_distribution<double> phi_dist(1e-7, 1e-3);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = strong_digraph(20 + trial % 30, 0.08, rng);
    Rng run_rng(trial);
    const Side side = trial % 2 == 0 ? Side::first : Side::second;
    const EvoCutRun run = evo_cut_directed_run(g, 0, side, phi_dist(rng), run_rng);
    EXPECT_TRUE(cleanup_bound_holds(run));
    EXPECT_NEAR(run.simplicity_epsilon, simplicity_epsilon(g, run.sample), 1e-12);
    if (!run.pair) continue;
    ++found;
    const DirectedClusterPair& p = *run.pair;
    EXPECT_TRUE(p.l.disjoint(p.r));
    EXPECT_EQ(p.flow, flow_ratio(g, p.l, p.r));
    EXPECT_TRUE(is_simple(from_cluster_pair(p.l, p.r)));
    EXPECT_EQ(from_cluster_pair(p.l, p.r), epsilon_simple_cleanup(run.sample));
    EXPECT_EQ(p.side, side);
  }
  EXPECT_GT(found, 0);
}

TEST(EvoCut, BothSidesKeepsLowerFlow) {
  TestRng rng(10);
  const Graph g = strong_digraph(40, 0.05, rng);
  std::vector<EvoCutRun> runs;
  const EvoCutRun best =
      evo_cut_directed_both(g, 3, 1e-6, 42, [&](const EvoCutRun& r) { runs.push_back(r); });
  ASSERT_EQ(runs.size(), 2u);
  const EvoCutRun again = evo_cut_directed_both(g, 3, 1e-6, 42);
  ASSERT_EQ(best.pair.has_value(), again.pair.has_value());
  if (best.pair) {
    EXPECT_EQ(best.pair->l, again.pair->l);
    for (const EvoCutRun& r : runs) {
      if (r.pair) EXPECT_LE(best.pair->flow, r.pair->flow);
    }
  }
}

TEST(EvoCut, RejectsBadInput) {
  const std::vector<Edge> e{{0, 1}};
  Rng rng(1);
  EXPECT_THROW(evo_cut_directed_run(Graph::undirected(2, e), 0, Side::first, 0.1, rng),
               std::invalid_argument);
  const Graph d = Graph::directed(3, e);
  EXPECT_THROW(evo_cut_directed_run(d, 0, Side::second, 0.1, rng), std::invalid_argument);
  EXPECT_THROW(evo_cut_directed_run(d, 0, Side::first, 0.0, rng), std::invalid_argument);
  EXPECT_THROW(evo_cut_directed_both(d, 2, 0.1, 1), std::invalid_argument);
}

// Along a long run from inside a planted cluster, the best set visited
// should have conductance below 3 sqrt(4 ln vol(V_H) / T) in at least 8/9
// of the runs.
TEST(GenerateSample, PathConductanceBound) {
  CbmPlusSpec spec;
  spec.base.n = 100;
  spec.base.p = 0.05;
  spec.base.q = 0.05;
  spec.n_local = 30;
  const GeneratedGraph gg = gen_cbm_plus(spec, 3);
  const Graph& g = gg.graph;
  constexpr std::size_t kSteps = 2000;
  const double bound = 3.0 * std::sqrt(4.0 * std::log(cover_total_volume(g)) / kSteps);
  ASSERT_LT(bound, 1.0);
  const VertexSet local = cluster_members(gg.labels, 3);
  int ok = 0;
  int runs = 0;
  for (Vertex v : local) {
    if (g.out_degree(v) <= 0.0) continue;
    Rng rng(1000 + v);
    const EspSample s = generate_sample(g, c1(v), kSteps, rng);
    ++runs;
    if (s.min_conductance <= bound) ++ok;
  }
  ASSERT_GT(runs, 10);
  EXPECT_GE(static_cast<double>(ok) / runs, 8.0 / 9.0);
}

}  // namespace
}  // namespace ldc
