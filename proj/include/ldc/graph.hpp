#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ldc {

using Vertex = std::uint32_t;

/// An input edge. For directed graphs the edge is the arc u -> v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One adjacency entry: the head of the arc and its weight.
struct Arc {
  Vertex to = 0;
  double w = 0.0;
};

/// A sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> ids);
  VertexSet(std::initializer_list<Vertex> ids);

  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  [[nodiscard]] const std::vector<Vertex>& ids() const { return ids_; }
  [[nodiscard]] auto begin() const { return ids_.begin(); }
  [[nodiscard]] auto end() const { return ids_.end(); }

  /// True if no id appears in both sets.
  [[nodiscard]] bool disjoint(const VertexSet& other) const;
  [[nodiscard]] VertexSet united(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Immutable weighted graph in compressed sparse row form.
///
/// Undirected graphs store one symmetric adjacency; out_arcs() and in_arcs()
/// both return it. Directed graphs store out- and in-adjacency separately.
/// Parallel edges are merged by summing weights. Self-loops, non-positive or
/// non-finite weights and out-of-range ids are rejected with
/// std::invalid_argument.
class Graph {
 public:
  Graph() = default;

  static Graph undirected(std::size_t n, std::span<const Edge> edges);
  static Graph directed(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t num_vertices() const { return degree_out_.size(); }
  /// Number of distinct edges (undirected) or arcs (directed) after merging.
  [[nodiscard]] std::size_t num_edges() const { return num_edges_; }
  [[nodiscard]] bool is_directed() const { return directed_; }

  [[nodiscard]] std::span<const Arc> out_arcs(Vertex v) const;
  [[nodiscard]] std::span<const Arc> in_arcs(Vertex v) const;
  [[nodiscard]] std::span<const Arc> neighbors(Vertex v) const { return out_arcs(v); }

  /// Weighted degree. On a digraph this is out_degree + in_degree.
  [[nodiscard]] double degree(Vertex v) const;
  [[nodiscard]] double out_degree(Vertex v) const;
  [[nodiscard]] double in_degree(Vertex v) const;

  /// Sum of degree() over all vertices.
  [[nodiscard]] double total_volume() const;
  /// Sum of edge weights (each undirected edge counted once).
  [[nodiscard]] double total_weight() const { return total_weight_; }

  /// Canonical edge list: undirected edges as (min, max), sorted by (u, v).
  [[nodiscard]] std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;

 private:
  static Graph build(std::size_t n, std::span<const Edge> edges, bool directed);

  bool directed_ = false;
  std::size_t num_edges_ = 0;
  double total_weight_ = 0.0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Arc> in_arcs_;
  std::vector<double> degree_out_;
  std::vector<double> degree_in_;
};

double volume(const Graph& g, const VertexSet& s);
double out_volume(const Graph& g, const VertexSet& s);
double in_volume(const Graph& g, const VertexSet& s);

/// Total weight of edges between disjoint a and b; on a digraph only arcs
/// from a to b are counted.
double cut_weight(const Graph& g, const VertexSet& a, const VertexSet& b);

/// |boundary(S)| / min(vol(S), vol(V \ S)) on an undirected graph.
double conductance(const Graph& g, const VertexSet& s);

/// 1 - 2 e(L, R) / vol(L u R). Undirected graphs only.
double bipartiteness(const Graph& g, const VertexSet& l, const VertexSet& r);

/// 1 - 2 e(L, R) / (vol_out(L) + vol_in(R)). Directed graphs only.
double flow_ratio(const Graph& g, const VertexSet& l, const VertexSet& r);

/// 1/2 |e(L, R) - e(R, L)| / (e(L, R) + e(R, L)). Directed graphs only.
double cut_imbalance(const Graph& g, const VertexSet& l, const VertexSet& r);

}  // namespace ldc
