#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ldc/graph.hpp"

// Virtual double cover (undirected input) and semi-double cover (directed
// input). Every base vertex u has copies u1 and u2. An arc (u, v) of the base
// graph becomes the cover edge {u1, v2}; an undirected edge contributes both
// arcs, which yields {u1, v2} and {u2, v1}. The cover is never materialized:
// all queries go through the base graph's out- and in-adjacency.

namespace ldc {

enum class Side : std::uint8_t { first = 1, second = 2 };

constexpr Side opposite(Side s) { return s == Side::first ? Side::second : Side::first; }

struct CoverVertex {
  Vertex base = 0;
  Side side = Side::first;

  /// Dense key 2 * base + (side - 1).
  [[nodiscard]] constexpr std::uint64_t key() const {
    return 2 * static_cast<std::uint64_t>(base) + (side == Side::first ? 0 : 1);
  }
  static constexpr CoverVertex from_key(std::uint64_t key) {
    return CoverVertex{static_cast<Vertex>(key / 2), key % 2 == 0 ? Side::first : Side::second};
  }
  [[nodiscard]] constexpr CoverVertex twin() const { return CoverVertex{base, opposite(side)}; }

  friend constexpr bool operator==(const CoverVertex&, const CoverVertex&) = default;
  friend constexpr auto operator<=>(const CoverVertex& a, const CoverVertex& b) {
    return a.key() <=> b.key();
  }
};

/// Sorted, duplicate-free set of cover vertices (ordered by key).
class CoverSet {
 public:
  CoverSet() = default;
  explicit CoverSet(std::vector<CoverVertex> members);
  CoverSet(std::initializer_list<CoverVertex> members);

  [[nodiscard]] bool contains(CoverVertex cv) const;
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] const std::vector<CoverVertex>& members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  friend bool operator==(const CoverSet&, const CoverSet&) = default;

 private:
  std::vector<CoverVertex> members_;
};

/// Degree of cv in the cover: out_degree(base) for side 1, in_degree(base)
/// for side 2. Both equal deg(base) on an undirected graph.
inline double cover_degree(const Graph& g, CoverVertex cv) {
  return cv.side == Side::first ? g.out_degree(cv.base) : g.in_degree(cv.base);
}

/// Calls f(neighbor, weight) for every cover neighbour of cv.
template <class F>
void for_each_cover_neighbor(const Graph& g, CoverVertex cv, F&& f) {
  if (cv.side == Side::first) {
    for (const Arc& a : g.out_arcs(cv.base)) f(CoverVertex{a.to, Side::second}, a.w);
  } else {
    for (const Arc& a : g.in_arcs(cv.base)) f(CoverVertex{a.to, Side::first}, a.w);
  }
}

std::vector<std::pair<CoverVertex, double>> cover_neighbors(const Graph& g, CoverVertex cv);

/// vol(V_H) = vol_out(V) + vol_in(V).
double cover_total_volume(const Graph& g);
double cover_volume(const Graph& g, const CoverSet& s);

/// Conductance of s inside the cover, min-volume denominator.
double conductance_in_cover(const Graph& g, const CoverSet& s);

struct SetPair {
  VertexSet l;
  VertexSet r;
};

/// L = {u : u1 in s}, R = {u : u2 in s}.
SetPair to_cluster_pair(const CoverSet& s);
/// L1 u R2.
CoverSet from_cluster_pair(const VertexSet& l, const VertexSet& r);

/// At most one copy of every base vertex.
bool is_simple(const CoverSet& s);

/// P = {u1, u2 : both copies in s}.
CoverSet doubled_part(const CoverSet& s);
/// vol(P) / vol(s); s is epsilon-simple for every epsilon at or above this.
double simplicity_epsilon(const Graph& g, const CoverSet& s);
/// s \ P.
CoverSet epsilon_simple_cleanup(const CoverSet& s);

}  // namespace ldc
