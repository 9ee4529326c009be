#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ldc/cover.hpp"
#include "ldc/graph.hpp"
#include "ldc/pagerank.hpp"

// Slow exact references. Everything here is dense or exhaustive and guarded
// by a size limit; exceeding a guard throws std::length_error.

namespace ldc {

/// Dense vector over cover vertices (index = CoverVertex::key(), length 2n)
/// or over base vertices (length n).
using DenseVector = std::vector<double>;

inline constexpr std::size_t kDenseLimit = 4096;
inline constexpr std::size_t kBruteForceLimit = 8;
inline constexpr std::size_t kKernelCoverLimit = 24;

DenseVector to_dense(const Graph& g, const MassVector& p);
MassVector from_dense(const DenseVector& x);
DenseVector cover_indicator(const Graph& g, CoverVertex cv);

/// x W for the lazy walk W = (I + D^-1 A) / 2, on the cover when cover is
/// true and on g itself otherwise (out-arcs for digraphs). Zero-degree
/// vertices keep their mass.
DenseVector lazy_walk_step(const Graph& g, const DenseVector& x, bool cover);

/// pr(alpha, s) = alpha sum_t (1 - alpha)^t s W^t, summed until the tail
/// drops below 1e-12 * |s|_1.
DenseVector exact_pagerank(const Graph& g, bool cover, double alpha, const DenseVector& s);

struct BestPair {
  VertexSet l;
  VertexSet r;
  double beta = 1.0;
};

/// Minimum bipartiteness over all disjoint (L, R) with vol(L u R) > 0.
/// Undirected, n <= 8. Ties keep the first pair in lexicographic order of the
/// assignment (vertex 0 most significant, outside < L < R).
BestPair brute_force_best_pair(const Graph& g);

struct BestCoverSet {
  CoverSet set;
  double phi = 1.0;
};

/// Minimum cover conductance over all simple cover sets whose conductance is
/// defined. Same enumeration order as brute_force_best_pair.
BestCoverSet brute_force_min_conductance(const Graph& g);

struct KernelEntry {
  CoverSet next;
  /// Plain evolving set kernel K(S, next).
  double k = 0.0;
  /// Volume-biased kernel vol(next) / vol(S) * K(S, next).
  double k_hat = 0.0;
};

/// Q(y, S) for every cover vertex, indexed by key.
DenseVector membership_probabilities(const Graph& g, const CoverSet& s);

/// One row of the evolving set kernel from s, including the empty set when
/// it has positive K. Entries sorted by decreasing threshold (increasing
/// set). Requires 2n <= 24 and vol(s) > 0.
std::vector<KernelEntry> exact_esp_kernel(const Graph& g, const CoverSet& s);

/// Lovasz-Simonovits curve of p on the cover: piecewise linear through
/// (vol(S_j), p(S_j)) for the sweep prefixes S_j, then flat to vol(V_H).
class LsCurve {
 public:
  LsCurve(const Graph& g, const MassVector& p);

  /// p[x]; throws std::out_of_range outside [0, vol(V_H)].
  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] const std::vector<std::pair<double, double>>& points() const { return points_; }
  [[nodiscard]] double total_volume() const { return total_volume_; }

 private:
  std::vector<std::pair<double, double>> points_;
  double total_volume_ = 0.0;
};

}  // namespace ldc
