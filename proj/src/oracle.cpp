#include "ldc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ldc {

namespace {

void check_dense_size(std::size_t size, std::size_t limit, const char* what) {
  if (size > limit) {
    throw std::length_error(std::string(what) + ": size " + std::to_string(size) +
                            " exceeds the oracle limit " + std::to_string(limit));
  }
}

double l1(const DenseVector& x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return s;
}

}  // namespace

DenseVector to_dense(const Graph& g, const MassVector& p) {
  DenseVector x(2 * g.num_vertices(), 0.0);
  for (const auto& [cv, m] : p.entries()) x.at(cv.key()) = m;
  return x;
}

MassVector from_dense(const DenseVector& x) {
  MassVector p;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) p.set(CoverVertex::from_key(i), x[i]);
  }
  return p;
}

DenseVector cover_indicator(const Graph& g, CoverVertex cv) {
  g.check_vertex(cv.base);
  DenseVector x(2 * g.num_vertices(), 0.0);
  x[cv.key()] = 1.0;
  return x;
}

DenseVector lazy_walk_step(const Graph& g, const DenseVector& x, bool cover) {
  const std::size_t n = g.num_vertices();
  const std::size_t dim = cover ? 2 * n : n;
  if (x.size() != dim) throw std::invalid_argument("lazy_walk_step: dimension mismatch");
  DenseVector y(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0.0) continue;
    if (cover) {
      const CoverVertex cv = CoverVertex::from_key(i);
      const double deg = cover_degree(g, cv);
      if (deg <= 0.0) {
        y[i] += x[i];
        continue;
      }
      y[i] += 0.5 * x[i];
      for_each_cover_neighbor(
          g, cv, [&](CoverVertex nb, double w) { y[nb.key()] += 0.5 * x[i] * w / deg; });
    } else {
      const auto v = static_cast<Vertex>(i);
      const double deg = g.out_degree(v);
      if (deg <= 0.0) {
        y[i] += x[i];
        continue;
      }
      y[i] += 0.5 * x[i];
      for (const Arc& a : g.out_arcs(v)) y[a.to] += 0.5 * x[i] * a.w / deg;
    }
  }
  return y;
}

DenseVector exact_pagerank(const Graph& g, bool cover, double alpha, const DenseVector& s) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("exact_pagerank: alpha must lie in (0, 1]");
  }
  const std::size_t dim = cover ? 2 * g.num_vertices() : g.num_vertices();
  check_dense_size(dim, kDenseLimit, "exact_pagerank");
  if (s.size() != dim) throw std::invalid_argument("exact_pagerank: dimension mismatch");

  DenseVector pr(dim, 0.0);
  DenseVector term = s;  // (1 - alpha)^t s W^t
  const double stop = 1e-12 * std::max(l1(s), 1e-300);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) pr[i] += alpha * term[i];
    // The remaining tail has l1 mass (1 - alpha) |term|_1.
    if ((1.0 - alpha) * l1(term) <= stop) break;
    term = lazy_walk_step(g, term, cover);
    for (double& v : term) v *= 1.0 - alpha;
  }
  return pr;
}

namespace {

/// Calls f(assignment) for every vector in {0, 1, 2}^n except all-zero, in
/// lexicographic order with vertex 0 most significant.
template <class F>
void for_each_assignment(std::size_t n, F&& f) {
  std::vector<std::uint8_t> a(n, 0);
  while (true) {
    std::size_t i = n;
    while (i > 0 && a[i - 1] == 2) a[--i] = 0;
    if (i == 0) return;
    ++a[i - 1];
    f(a);
  }
}

SetPair split(const std::vector<std::uint8_t>& a) {
  std::vector<Vertex> l;
  std::vector<Vertex> r;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] == 1) l.push_back(static_cast<Vertex>(v));
    if (a[v] == 2) r.push_back(static_cast<Vertex>(v));
  }
  return SetPair{VertexSet(std::move(l)), VertexSet(std::move(r))};
}

}  // namespace

BestPair brute_force_best_pair(const Graph& g) {
  if (g.is_directed()) throw std::invalid_argument("brute_force_best_pair: graph must be undirected");
  check_dense_size(g.num_vertices(), kBruteForceLimit, "brute_force_best_pair");
  BestPair best;
  bool found = false;
  for_each_assignment(g.num_vertices(), [&](const std::vector<std::uint8_t>& a) {
    SetPair pair = split(a);
    if (volume(g, pair.l) + volume(g, pair.r) <= 0.0) return;
    const double beta = bipartiteness(g, pair.l, pair.r);
    if (!found || beta < best.beta) {
      found = true;
      best = BestPair{std::move(pair.l), std::move(pair.r), beta};
    }
  });
  if (!found) throw std::invalid_argument("brute_force_best_pair: graph has no edges");
  return best;
}

BestCoverSet brute_force_min_conductance(const Graph& g) {
  check_dense_size(g.num_vertices(), kBruteForceLimit, "brute_force_min_conductance");
  const double total = cover_total_volume(g);
  BestCoverSet best;
  bool found = false;
  for_each_assignment(g.num_vertices(), [&](const std::vector<std::uint8_t>& a) {
    const SetPair pair = split(a);
    CoverSet s = from_cluster_pair(pair.l, pair.r);
    const double vol = cover_volume(g, s);
    if (std::min(vol, total - vol) <= 0.0) return;
    const double phi = conductance_in_cover(g, s);
    if (!found || phi < best.phi) {
      found = true;
      best = BestCoverSet{std::move(s), phi};
    }
  });
  if (!found) throw std::invalid_argument("brute_force_min_conductance: no set has defined conductance");
  return best;
}

DenseVector membership_probabilities(const Graph& g, const CoverSet& s) {
  const std::size_t dim = 2 * g.num_vertices();
  check_dense_size(dim, kDenseLimit, "membership_probabilities");
  DenseVector q(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    const CoverVertex y = CoverVertex::from_key(i);
    const bool member = s.contains(y);
    const double deg = cover_degree(g, y);
    if (deg <= 0.0) {
      q[i] = member ? 1.0 : 0.0;
      continue;
    }
    double inner = 0.0;
    for_each_cover_neighbor(g, y, [&](CoverVertex nb, double w) {
      if (s.contains(nb)) inner += w;
    });
    q[i] = (member ? 0.5 : 0.0) + 0.5 * inner / deg;
  }
  return q;
}

std::vector<KernelEntry> exact_esp_kernel(const Graph& g, const CoverSet& s) {
  const std::size_t dim = 2 * g.num_vertices();
  check_dense_size(dim, kKernelCoverLimit, "exact_esp_kernel");
  for (CoverVertex cv : s) g.check_vertex(cv.base);
  const double vol_s = cover_volume(g, s);
  if (vol_s <= 0.0) throw std::invalid_argument("exact_esp_kernel: start set has zero volume");

  const DenseVector q = membership_probabilities(g, s);
  // Distinct positive Q values, descending, merged within rounding noise.
  constexpr double kMerge = 1e-12;
  std::vector<double> levels;
  for (double v : q) {
    if (v > kMerge) levels.push_back(v);
  }
  std::sort(levels.begin(), levels.end(), std::greater<>());
  std::vector<double> distinct;
  for (double v : levels) {
    if (distinct.empty() || distinct.back() - v > kMerge) distinct.push_back(v);
  }

  std::vector<KernelEntry> row;
  const double top = distinct.empty() ? 0.0 : std::min(1.0, distinct.front());
  if (1.0 - top > kMerge) row.push_back(KernelEntry{CoverSet{}, 1.0 - top, 0.0});
  for (std::size_t j = 0; j < distinct.size(); ++j) {
    const double hi = std::min(1.0, distinct[j]);
    const double lo = j + 1 < distinct.size() ? distinct[j + 1] : 0.0;
    std::vector<CoverVertex> members;
    for (std::size_t i = 0; i < dim; ++i) {
      if (q[i] >= distinct[j] - kMerge) members.push_back(CoverVertex::from_key(i));
    }
    CoverSet next(std::move(members));
    const double k = hi - lo;
    const double k_hat = cover_volume(g, next) / vol_s * k;
    row.push_back(KernelEntry{std::move(next), k, k_hat});
  }
  return row;
}

LsCurve::LsCurve(const Graph& g, const MassVector& p) : total_volume_(cover_total_volume(g)) {
  struct Item {
    double ratio;
    double degree;
    double mass;
  };
  std::vector<Item> items;
  for (const auto& [cv, m] : p.entries()) {
    g.check_vertex(cv.base);
    const double deg = cover_degree(g, cv);
    if (deg <= 0.0) throw std::invalid_argument("ls_curve: mass on a zero-degree vertex");
    items.push_back(Item{m / deg, deg, m});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.ratio > b.ratio; });
  points_.emplace_back(0.0, 0.0);
  double x = 0.0;
  double y = 0.0;
  for (const Item& it : items) {
    x += it.degree;
    y += it.mass;
    points_.emplace_back(x, y);
  }
  if (x < total_volume_) points_.emplace_back(total_volume_, y);
}

double LsCurve::operator()(double x) const {
  if (!(x >= 0.0 && x <= total_volume_)) {
    throw std::out_of_range("ls_curve: x = " + std::to_string(x) + " outside [0, " +
                            std::to_string(total_volume_) + "]");
  }
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const std::pair<double, double>& pt, double v) { return pt.first < v; });
  if (it == points_.end()) return points_.back().second;
  if (it->first == x || it == points_.begin()) return it->second;
  const auto& [x1, y1] = *it;
  const auto& [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace ldc
