#include "ldc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ldc {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::disjoint(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  VertexSet result;
  result.ids_ = std::move(out);
  return result;
}

Graph Graph::undirected(std::size_t n, std::span<const Edge> edges) {
  return build(n, edges, false);
}

Graph Graph::directed(std::size_t n, std::span<const Edge> edges) {
  return build(n, edges, true);
}

namespace {

// Sort arcs by (tail, head) and merge duplicates by summing weights.
std::vector<Edge> merge_arcs(std::vector<Edge> arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<Edge> merged;
  merged.reserve(arcs.size());
  for (const Edge& e : arcs) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().w += e.w;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

void fill_csr(std::size_t n, const std::vector<Edge>& arcs, std::vector<std::size_t>& offsets,
              std::vector<Arc>& out, std::vector<double>& degree) {
  offsets.assign(n + 1, 0);
  degree.assign(n, 0.0);
  for (const Edge& e : arcs) offsets[e.u + 1]++;
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  out.resize(arcs.size());
  // arcs are sorted by tail, so a linear fill keeps heads sorted per vertex.
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out[i] = Arc{arcs[i].v, arcs[i].w};
    degree[arcs[i].u] += arcs[i].w;
  }
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges, bool directed) {
  if (n > static_cast<std::size_t>(UINT32_MAX)) {
    throw std::invalid_argument("graph: too many vertices");
  }
  std::vector<Edge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("graph: edge " + std::to_string(i) + " has vertex id out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
    }
    if (!std::isfinite(e.w) || e.w <= 0.0) {
      throw std::invalid_argument("graph: edge " + std::to_string(i) + " has non-positive weight");
    }
    arcs.push_back(e);
    if (!directed) arcs.push_back(Edge{e.v, e.u, e.w});
  }
  arcs = merge_arcs(std::move(arcs));

  Graph g;
  g.directed_ = directed;
  g.num_edges_ = directed ? arcs.size() : arcs.size() / 2;
  fill_csr(n, arcs, g.out_offsets_, g.out_arcs_, g.degree_out_);
  double total = 0.0;
  for (const Edge& e : arcs) total += e.w;
  g.total_weight_ = directed ? total : total / 2.0;
  if (directed) {
    std::vector<Edge> reversed;
    reversed.reserve(arcs.size());
    for (const Edge& e : arcs) reversed.push_back(Edge{e.v, e.u, e.w});
    reversed = merge_arcs(std::move(reversed));
    fill_csr(n, reversed, g.in_offsets_, g.in_arcs_, g.degree_in_);
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= num_vertices()) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range (n = " +
                            std::to_string(num_vertices()) + ")");
  }
}

std::span<const Arc> Graph::out_arcs(Vertex v) const {
  check_vertex(v);
  return {out_arcs_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Arc> Graph::in_arcs(Vertex v) const {
  if (!directed_) return out_arcs(v);
  check_vertex(v);
  return {in_arcs_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

double Graph::out_degree(Vertex v) const {
  check_vertex(v);
  return degree_out_[v];
}

double Graph::in_degree(Vertex v) const {
  check_vertex(v);
  return directed_ ? degree_in_[v] : degree_out_[v];
}

double Graph::degree(Vertex v) const {
  check_vertex(v);
  return directed_ ? degree_out_[v] + degree_in_[v] : degree_out_[v];
}

double Graph::total_volume() const {
  return 2.0 * total_weight_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (const Arc& a : out_arcs(u)) {
      if (directed_ || u < a.to) out.push_back(Edge{u, a.to, a.w});
    }
  }
  return out;
}

namespace {

void check_set(const Graph& g, const VertexSet& s) {
  if (!s.empty()) g.check_vertex(s.ids().back());
}

void check_disjoint(const VertexSet& a, const VertexSet& b) {
  if (!a.disjoint(b)) throw std::invalid_argument("vertex sets overlap");
}

}  // namespace

double volume(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  double vol = 0.0;
  for (Vertex v : s) vol += g.degree(v);
  return vol;
}

double out_volume(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  double vol = 0.0;
  for (Vertex v : s) vol += g.out_degree(v);
  return vol;
}

double in_volume(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  double vol = 0.0;
  for (Vertex v : s) vol += g.in_degree(v);
  return vol;
}

double cut_weight(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_set(g, a);
  check_set(g, b);
  check_disjoint(a, b);
  double w = 0.0;
  for (Vertex u : a) {
    for (const Arc& arc : g.out_arcs(u)) {
      if (b.contains(arc.to)) w += arc.w;
    }
  }
  return w;
}

double conductance(const Graph& g, const VertexSet& s) {
  if (g.is_directed()) throw std::invalid_argument("conductance: graph must be undirected");
  check_set(g, s);
  if (s.empty() || s.size() == g.num_vertices()) {
    throw std::invalid_argument("conductance: set must be nonempty and proper");
  }
  double boundary = 0.0;
  double vol = 0.0;
  for (Vertex u : s) {
    vol += g.degree(u);
    for (const Arc& arc : g.out_arcs(u)) {
      if (!s.contains(arc.to)) boundary += arc.w;
    }
  }
  const double denom = std::min(vol, g.total_volume() - vol);
  if (denom <= 0.0) throw std::invalid_argument("conductance: zero volume on one side");
  return boundary / denom;
}

double bipartiteness(const Graph& g, const VertexSet& l, const VertexSet& r) {
  if (g.is_directed()) throw std::invalid_argument("bipartiteness: graph must be undirected");
  const double e = cut_weight(g, l, r);
  const double vol = volume(g, l) + volume(g, r);
  if (vol <= 0.0) throw std::invalid_argument("bipartiteness: L u R has zero volume");
  return 1.0 - 2.0 * e / vol;
}

double flow_ratio(const Graph& g, const VertexSet& l, const VertexSet& r) {
  if (!g.is_directed()) throw std::invalid_argument("flow_ratio: graph must be directed");
  const double e = cut_weight(g, l, r);
  const double denom = out_volume(g, l) + in_volume(g, r);
  if (denom <= 0.0) throw std::invalid_argument("flow_ratio: zero denominator");
  return 1.0 - 2.0 * e / denom;
}

double cut_imbalance(const Graph& g, const VertexSet& l, const VertexSet& r) {
  if (!g.is_directed()) throw std::invalid_argument("cut_imbalance: graph must be directed");
  const double lr = cut_weight(g, l, r);
  const double rl = cut_weight(g, r, l);
  if (lr + rl <= 0.0) throw std::invalid_argument("cut_imbalance: no edges between L and R");
  return 0.5 * std::abs((lr - rl) / (lr + rl));
}

}  // namespace ldc
