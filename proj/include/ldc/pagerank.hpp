#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "ldc/cover.hpp"
#include "ldc/graph.hpp"

namespace ldc {

/// Sparse nonnegative vector over cover vertices. Zeros are never stored;
/// values below kMassFloor are treated as zero.
class MassVector {
 public:
  static constexpr double kMassFloor = 1e-300;

  [[nodiscard]] double get(CoverVertex cv) const;
  void set(CoverVertex cv, double value);
  void add(CoverVertex cv, double value) { set(cv, get(cv) + value); }

  [[nodiscard]] std::size_t support_size() const { return mass_.size(); }
  [[nodiscard]] double l1_norm() const;
  /// (vertex, mass) pairs sorted by cover key.
  [[nodiscard]] std::vector<std::pair<CoverVertex, double>> entries() const;
  [[nodiscard]] CoverSet support() const;
  /// Sum of cover degrees over the support.
  [[nodiscard]] double support_volume(const Graph& g) const;

  MassVector& operator*=(double c);

 private:
  absl::flat_hash_map<std::uint64_t, double> mass_;
};

/// State of the double-cover push procedure: p + pr_H(alpha, r) stays equal
/// to pr_H(alpha, chi_{seed_1}) across every push.
class AprState {
 public:
  AprState(const Graph& g, Vertex seed, double alpha, double epsilon);

  /// One push at cv: banks alpha * r(cv) into p, keeps (1 - alpha) r / 2 at
  /// cv and spreads (1 - alpha) r / 2 across the opposite-side neighbours in
  /// proportion to edge weight. Throws std::logic_error if r(cv) == 0.
  void push(CoverVertex cv);

  /// Pops the FIFO queue until some entry is still above threshold and pushes
  /// it. Returns false once every residual is below epsilon * degree.
  bool step();

  void run(const std::function<void(const AprState&)>& after_push = {});

  [[nodiscard]] MassVector pagerank() const;
  [[nodiscard]] MassVector residual() const;
  [[nodiscard]] double pagerank_at(CoverVertex cv) const;
  [[nodiscard]] double residual_at(CoverVertex cv) const;

  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double epsilon() const { return epsilon_; }
  [[nodiscard]] std::size_t push_count() const { return pushes_; }
  /// Sum of the degrees of the pushed cover vertices, one term per push.
  [[nodiscard]] double pushed_degree_sum() const { return pushed_degree_sum_; }
  /// Number of cover vertices that ever held mass.
  [[nodiscard]] std::size_t touched() const { return entries_.size(); }
  /// max over touched cover vertices of r(u_i) / deg(u_i).
  [[nodiscard]] double max_scaled_residual() const;

 private:
  struct Entry {
    double p = 0.0;
    double r = 0.0;
    bool queued = false;
  };

  [[nodiscard]] bool above_threshold(CoverVertex cv, const Entry& e) const;
  void enqueue_if_needed(CoverVertex cv, Entry& e);

  const Graph* graph_;
  double alpha_;
  double epsilon_;
  absl::flat_hash_map<std::uint64_t, Entry> entries_;
  std::deque<std::uint64_t> queue_;
  std::size_t pushes_ = 0;
  double pushed_degree_sum_ = 0.0;
};

struct AprResult {
  MassVector p;
  MassVector r;
  std::size_t pushes = 0;
  double pushed_degree_sum = 0.0;
  std::size_t touched = 0;
};

/// Approximate personalized Pagerank on the cover seeded at v1. Requires
/// 0 < alpha <= 1, epsilon > 0 and deg(v) > 0.
AprResult approximate_pagerank_dc(const Graph& g, Vertex v, double alpha, double epsilon);

/// (sigma p)(u1) = max(0, p(u1) - p(u2)) and symmetrically for u2.
MassVector simplify(const MassVector& p);

enum class SweepMode { first_qualifying, best };

struct ClusterPair {
  VertexSet l;
  VertexSet r;
  double beta = 1.0;
  double volume = 0.0;
  /// 1-based length of the sweep prefix that produced the pair.
  std::size_t sweep_index = 0;
};

/// Sweeps supp(p) in order of p / deg (descending; ties by ascending base id,
/// side 1 first). In first_qualifying mode returns the first prefix whose
/// cover conductance is at most beta_target; in best mode the prefix of
/// minimum conductance, provided it is at most beta_target. p must have
/// simple support.
std::optional<ClusterPair> sweep_cut(const Graph& g, const MassVector& p, double beta_target,
                                     SweepMode mode = SweepMode::first_qualifying);

struct LocBipartOptions {
  SweepMode sweep = SweepMode::first_qualifying;
};

struct LocBipartRun {
  std::optional<ClusterPair> pair;
  double alpha = 0.0;
  double epsilon = 0.0;
  std::size_t pushes = 0;
  /// Volume of the support of the unsimplified vector.
  double support_volume = 0.0;
};

/// Finds disjoint L, R around u with bipartiteness at most beta_hat, using
/// alpha = beta_hat^2 / 378 and epsilon = 1 / (20 gamma).
LocBipartRun loc_bipart_dc_run(const Graph& g, Vertex u, double gamma, double beta_hat,
                               const LocBipartOptions& options = {});

std::optional<ClusterPair> loc_bipart_dc(const Graph& g, Vertex u, double gamma, double beta_hat,
                                         const LocBipartOptions& options = {});

/// sqrt(7560 beta): the beta_hat whose alpha equals 20 beta, the setting under
/// which a pair of bipartiteness beta is guaranteed to be approximated.
double beta_hat_for_target(double beta);

}  // namespace ldc
