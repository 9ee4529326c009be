#pragma once

#include <random>
#include <vector>

#include "ldc/cover.hpp"
#include "ldc/graph.hpp"
#include "ldc/pagerank.hpp"

namespace ldc::testing {

using TestRng = std::mt19937_64;

inline std::vector<Edge> random_edges(std::size_t n, double density, bool directed, bool weighted,
                                      TestRng& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.25, 4.0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || coin(rng) >= density) continue;
      edges.push_back(Edge{u, v, weighted ? weight(rng) : 1.0});
    }
  }
  return edges;
}

inline Graph random_graph(std::size_t n, double density, bool directed, bool weighted,
                          TestRng& rng) {
  const auto edges = random_edges(n, density, directed, weighted, rng);
  return directed ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

/// Connected undirected graph: a random spanning tree plus random extra edges.
inline Graph random_connected_graph(std::size_t n, double density, bool weighted, TestRng& rng) {
  std::uniform_real_distribution<double> weight(0.25, 4.0);
  std::vector<Edge> edges = random_edges(n, density, false, weighted, rng);
  for (Vertex v = 1; v < n; ++v) {
    const auto parent = static_cast<Vertex>(std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
    edges.push_back(Edge{parent, v, weighted ? weight(rng) : 1.0});
  }
  return Graph::undirected(n, edges);
}

/// Each vertex independently goes to L, R or neither.
inline SetPair random_pair(std::size_t n, TestRng& rng) {
  std::uniform_int_distribution<int> roll(0, 2);
  std::vector<Vertex> l;
  std::vector<Vertex> r;
  for (Vertex v = 0; v < n; ++v) {
    const int x = roll(rng);
    if (x == 1) l.push_back(v);
    if (x == 2) r.push_back(v);
  }
  return SetPair{VertexSet(std::move(l)), VertexSet(std::move(r))};
}

inline MassVector random_mass(std::size_t n, double density, TestRng& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  MassVector p;
  for (Vertex v = 0; v < n; ++v) {
    for (Side s : {Side::first, Side::second}) {
      if (coin(rng) < density) p.set(CoverVertex{v, s}, coin(rng));
    }
  }
  return p;
}

}  // namespace ldc::testing
