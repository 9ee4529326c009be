#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ldc/graph.hpp"

namespace ldc {

/// Three-cluster SBM: |C1| = |C2| = n1, |C3| = 10 n1; intra-C1/C2 edges with
/// probability p1, intra-C3 with p2 = 2 p1, C1-C2 with q1, and C1-C3, C2-C3
/// with q2 = 0.1 p1.
struct SbmSpec {
  std::size_t n1 = 1000;
  double p1 = 0.001;
  double q1 = 0.018;

  [[nodiscard]] double p2() const { return 2.0 * p1; }
  [[nodiscard]] double q2() const { return 0.1 * p1; }
  [[nodiscard]] std::size_t n3() const { return 10 * n1; }
  void validate() const;
};

/// Cyclic block model: k clusters of size n, intra-cluster edges with
/// probability p (uniform orientation), C_i -> C_{i+1 mod k} edges with
/// probability q, oriented forward with probability eta.
struct CbmSpec {
  std::size_t k = 3;
  std::size_t n = 1000;
  double p = 0.001;
  double q = 0.01;
  double eta = 0.9;
  void validate() const;
};

/// CBM plus two local clusters C_{k+1}, C_{k+2} of size n_local with mutual
/// edges (probability q1_local, uniform orientation) and edges to C1 with
/// probability q2_local: C1 -> C_{k+1} and C_{k+2} -> C1 with probability
/// eta_local each.
struct CbmPlusSpec {
  CbmSpec base;
  std::size_t n_local = 100;
  double q1_local = 0.5;
  double q2_local = 0.005;
  double eta_local = 1.0;
  void validate() const;
};

struct GeneratedGraph {
  Graph graph;
  /// Cluster index of every vertex; clusters occupy contiguous id ranges.
  std::vector<std::uint32_t> labels;
};

GeneratedGraph gen_sbm(const SbmSpec& spec, std::uint64_t seed);
GeneratedGraph gen_cbm(const CbmSpec& spec, std::uint64_t seed);
GeneratedGraph gen_cbm_plus(const CbmPlusSpec& spec, std::uint64_t seed);

/// Vertices carrying the given label.
VertexSet cluster_members(const std::vector<std::uint32_t>& labels, std::uint32_t label);

}  // namespace ldc
