#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include <absl/container/flat_hash_map.h>

#include "ldc/cover.hpp"
#include "ldc/graph.hpp"

namespace ldc {

using Rng = std::mt19937_64;

/// Volume-biased evolving set process on the cover, simulated through the
/// walk coupling: the walker X is advanced one lazy step, a threshold U is
/// drawn uniformly from (0, Q(X, S)], and the next set is every y with
/// Q(y, S) >= U, where Q(y, S) is the probability that one lazy step from y
/// lands in S. The walker always stays inside the set.
///
/// Only S and its one-hop boundary are stored; per-step work is
/// proportional to their size.
class EspState {
 public:
  /// S_0 = {seed}, X_0 = seed. The seed must have positive cover degree.
  EspState(const Graph& g, CoverVertex seed);
  /// S_0 = start, X_0 drawn from start with probability proportional to
  /// cover degree. start must have positive volume.
  EspState(const Graph& g, const CoverSet& start, Rng& rng);

  void step(Rng& rng);

  /// Q(y, S) for the current S.
  [[nodiscard]] double membership_probability(CoverVertex y) const;

  [[nodiscard]] CoverSet current_set() const;
  [[nodiscard]] bool contains(CoverVertex y) const;
  [[nodiscard]] CoverVertex walker() const { return walker_; }
  [[nodiscard]] std::size_t steps() const { return steps_; }
  [[nodiscard]] std::size_t set_size() const { return set_size_; }
  [[nodiscard]] double set_volume() const { return volume_; }
  /// Cover conductance of the current set; nullopt when either side has
  /// zero volume.
  [[nodiscard]] std::optional<double> conductance() const;

 private:
  struct Entry {
    double inner = 0.0;     // weight of arcs from y into S
    std::uint32_t hits = 0;  // number of such arcs
    bool member = false;
  };

  void insert(CoverVertex x);
  void remove(CoverVertex x);
  [[nodiscard]] double q_of(CoverVertex y, const Entry& e) const;
  CoverVertex walk_step(CoverVertex x, Rng& rng) const;

  const Graph* graph_;
  absl::flat_hash_map<std::uint64_t, Entry> entries_;
  CoverVertex walker_;
  std::size_t steps_ = 0;
  std::size_t set_size_ = 0;
  double volume_ = 0.0;
  double internal_ = 0.0;  // sum of arc weights with both ends in S (each edge twice)
};

struct EspSample {
  CoverSet final_set;
  /// Minimum-conductance set along S_0..S_T.
  CoverSet min_set;
  double min_conductance = 1.0;
  std::size_t steps = 0;
};

/// Runs T steps of the volume-biased process from {seed}.
EspSample generate_sample(const Graph& g, CoverVertex seed, std::size_t steps, Rng& rng);

struct DirectedClusterPair {
  VertexSet l;
  VertexSet r;
  double flow = 1.0;
  /// vol_out(L) + vol_in(R).
  double volume = 0.0;
  std::size_t steps_used = 0;
  Side side = Side::first;
};

struct EvoCutRun {
  std::optional<DirectedClusterPair> pair;
  std::size_t steps = 0;
  CoverSet sample;
  /// vol(P) / vol(S) where P holds the doubled vertices of the sample.
  double simplicity_epsilon = 0.0;
  std::optional<double> sample_conductance;
  std::optional<double> cleaned_conductance;
};

/// max(1, floor(1 / (100 phi^(2/3)))).
std::size_t evo_cut_steps(double phi);

/// Samples S from the process seeded at (u, side) and returns the vertices
/// with exactly one copy in S: L from side 1, R from side 2.
EvoCutRun evo_cut_directed_run(const Graph& g, Vertex u, Side side, double phi, Rng& rng);

std::optional<DirectedClusterPair> evo_cut_directed(const Graph& g, Vertex u, Side side,
                                                    double phi, Rng& rng);

/// Runs both seed sides, each with its own generator derived from seed, and
/// keeps the output with the lower flow ratio. on_run sees every side's run.
EvoCutRun evo_cut_directed_both(const Graph& g, Vertex u, double phi, std::uint64_t seed,
                                const std::function<void(const EvoCutRun&)>& on_run = {});

/// Phi(S \ P) <= (Phi(S) + eps) / (1 - eps) + 1e-12 for the run's sample,
/// vacuous when eps = 1 or either conductance is undefined.
bool cleanup_bound_holds(const EvoCutRun& run);

}  // namespace ldc
