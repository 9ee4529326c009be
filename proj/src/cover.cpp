#include "ldc/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldc {

CoverSet::CoverSet(std::vector<CoverVertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

CoverSet::CoverSet(std::initializer_list<CoverVertex> members)
    : CoverSet(std::vector<CoverVertex>(members)) {}

bool CoverSet::contains(CoverVertex cv) const {
  return std::binary_search(members_.begin(), members_.end(), cv);
}

std::vector<std::pair<CoverVertex, double>> cover_neighbors(const Graph& g, CoverVertex cv) {
  std::vector<std::pair<CoverVertex, double>> out;
  for_each_cover_neighbor(g, cv, [&](CoverVertex nb, double w) { out.emplace_back(nb, w); });
  return out;
}

double cover_total_volume(const Graph& g) {
  // Each base arc contributes one cover edge, i.e. 2w of cover volume.
  return g.is_directed() ? 2.0 * g.total_weight() : 2.0 * g.total_volume();
}

double cover_volume(const Graph& g, const CoverSet& s) {
  double vol = 0.0;
  for (CoverVertex cv : s) vol += cover_degree(g, cv);
  return vol;
}

double conductance_in_cover(const Graph& g, const CoverSet& s) {
  if (s.empty()) throw std::invalid_argument("conductance_in_cover: empty set");
  if (s.size() == 2 * g.num_vertices()) {
    throw std::invalid_argument("conductance_in_cover: set is the whole cover");
  }
  double vol = 0.0;
  double boundary = 0.0;
  for (CoverVertex cv : s) {
    vol += cover_degree(g, cv);
    for_each_cover_neighbor(g, cv, [&](CoverVertex nb, double w) {
      if (!s.contains(nb)) boundary += w;
    });
  }
  const double denom = std::min(vol, cover_total_volume(g) - vol);
  if (denom <= 0.0) throw std::invalid_argument("conductance_in_cover: zero volume on one side");
  return boundary / denom;
}

SetPair to_cluster_pair(const CoverSet& s) {
  std::vector<Vertex> l;
  std::vector<Vertex> r;
  for (CoverVertex cv : s) (cv.side == Side::first ? l : r).push_back(cv.base);
  return SetPair{VertexSet(std::move(l)), VertexSet(std::move(r))};
}

CoverSet from_cluster_pair(const VertexSet& l, const VertexSet& r) {
  std::vector<CoverVertex> members;
  members.reserve(l.size() + r.size());
  for (Vertex u : l) members.push_back(CoverVertex{u, Side::first});
  for (Vertex u : r) members.push_back(CoverVertex{u, Side::second});
  return CoverSet(std::move(members));
}

bool is_simple(const CoverSet& s) {
  // Sorted by key, so u1 and u2 are adjacent when both are present.
  const auto& m = s.members();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i].base == m[i - 1].base) return false;
  }
  return true;
}

CoverSet doubled_part(const CoverSet& s) {
  std::vector<CoverVertex> p;
  const auto& m = s.members();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i].base == m[i - 1].base) {
      p.push_back(m[i - 1]);
      p.push_back(m[i]);
    }
  }
  return CoverSet(std::move(p));
}

double simplicity_epsilon(const Graph& g, const CoverSet& s) {
  const double vol = cover_volume(g, s);
  if (vol <= 0.0) throw std::invalid_argument("simplicity_epsilon: zero-volume set");
  return cover_volume(g, doubled_part(s)) / vol;
}

CoverSet epsilon_simple_cleanup(const CoverSet& s) {
  std::vector<CoverVertex> kept;
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const bool dup_prev = i > 0 && m[i - 1].base == m[i].base;
    const bool dup_next = i + 1 < m.size() && m[i + 1].base == m[i].base;
    if (!dup_prev && !dup_next) kept.push_back(m[i]);
  }
  return CoverSet(std::move(kept));
}

}  // namespace ldc
