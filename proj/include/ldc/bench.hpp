#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ldc/esp.hpp"
#include "ldc/generators.hpp"
#include "ldc/pagerank.hpp"

// Synthetic experiment drivers shared by `bench` and the acceptance suite.
// Trial seeds are drawn up front from trial_seed, so results do not depend
// on the number of worker threads.

namespace ldc {

struct Table1Options {
  SbmSpec spec;
  std::size_t runs = 10;
  std::uint64_t graph_seed = 1;
  std::uint64_t trial_seed = 7;
  /// beta_hat values tried in order; a trial keeps the first that returns.
  std::vector<double> beta_ladder{0.15, 0.20, 0.25};
  /// gamma = gamma_fraction * vol(C1 u C2) of the generated graph.
  double gamma_fraction = 0.25;
  SweepMode sweep = SweepMode::first_qualifying;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Table1Trial {
  Vertex seed = 0;
  double beta_hat = 0.0;  // last value tried
  std::optional<ClusterPair> pair;
  double ari = 0.0;
  double misclassified = 1.0;
  double seconds = 0.0;
  std::size_t pushes = 0;
  /// Largest vol(supp(p)) * epsilon * alpha over the ladder's calls.
  double support_bound_ratio = 0.0;
  /// Returned beta <= beta_hat and L, R disjoint.
  bool contract_ok = true;
};

struct Table1Report {
  std::size_t n1 = 0;
  std::size_t edges = 0;
  double gamma = 0.0;
  double target_beta = 0.0;  // beta(C1, C2)
  std::vector<Table1Trial> trials;
  std::size_t found = 0;
  /// ARI and misclassified ratio average over all trials (a miss counts as
  /// ARI 0 and ratio 1); beta averages over found trials only.
  double mean_ari = 0.0;
  double mean_beta = 0.0;
  double mean_misclassified = 0.0;
  double seconds = 0.0;  // generation plus all trials
  bool contracts_ok = true;
};

Table1Report run_table1(const Table1Options& options);

struct Table2Options {
  CbmPlusSpec spec;
  std::size_t runs = 10;
  std::uint64_t graph_seed = 1;
  std::uint64_t trial_seed = 11;
  /// 1e-6 gives T = 100 steps.
  double phi = 1e-6;
  unsigned threads = 0;
};

struct Table2Trial {
  Vertex seed = 0;
  std::uint64_t rng_seed = 0;
  EvoCutRun run;
  double ari = 0.0;
  double seconds = 0.0;
  /// Cleanup bound held on both sides' runs.
  bool cleanup_ok = true;
};

struct Table2Report {
  std::size_t edges = 0;
  double target_flow = 0.0;  // F(C_{k+1}, C_{k+2})
  std::size_t steps = 0;
  std::vector<Table2Trial> trials;
  std::size_t found = 0;
  double mean_ari = 0.0;   // over all trials, a miss counts as 0
  double mean_flow = 0.0;  // over found trials
  double seconds = 0.0;
  bool cleanup_ok = true;
};

Table2Report run_table2(const Table2Options& options);

}  // namespace ldc
