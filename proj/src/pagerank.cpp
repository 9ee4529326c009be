#include "ldc/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <absl/container/flat_hash_set.h>

namespace ldc {

double MassVector::get(CoverVertex cv) const {
  auto it = mass_.find(cv.key());
  return it == mass_.end() ? 0.0 : it->second;
}

void MassVector::set(CoverVertex cv, double value) {
  if (value < 0.0 || std::isnan(value)) {
    throw std::invalid_argument("MassVector: negative mass");
  }
  if (value < kMassFloor) {
    mass_.erase(cv.key());
  } else {
    mass_[cv.key()] = value;
  }
}

double MassVector::l1_norm() const {
  double total = 0.0;
  for (const auto& [cv, m] : entries()) total += m;
  return total;
}

std::vector<std::pair<CoverVertex, double>> MassVector::entries() const {
  std::vector<std::pair<CoverVertex, double>> out;
  out.reserve(mass_.size());
  for (const auto& [key, m] : mass_) out.emplace_back(CoverVertex::from_key(key), m);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

CoverSet MassVector::support() const {
  std::vector<CoverVertex> members;
  members.reserve(mass_.size());
  for (const auto& [key, m] : mass_) members.push_back(CoverVertex::from_key(key));
  return CoverSet(std::move(members));
}

double MassVector::support_volume(const Graph& g) const {
  double vol = 0.0;
  for (const auto& [cv, m] : entries()) vol += cover_degree(g, cv);
  return vol;
}

MassVector& MassVector::operator*=(double c) {
  if (c < 0.0) throw std::invalid_argument("MassVector: negative scale");
  for (auto it = mass_.begin(); it != mass_.end();) {
    it->second *= c;
    if (it->second < kMassFloor) {
      mass_.erase(it++);
    } else {
      ++it;
    }
  }
  return *this;
}

AprState::AprState(const Graph& g, Vertex seed, double alpha, double epsilon)
    : graph_(&g), alpha_(alpha), epsilon_(epsilon) {
  g.check_vertex(seed);
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("approximate pagerank: alpha must lie in (0, 1]");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("approximate pagerank: epsilon must be positive");
  const CoverVertex start{seed, Side::first};
  if (cover_degree(g, start) <= 0.0) {
    throw std::invalid_argument("approximate pagerank: seed vertex " + std::to_string(seed) +
                                " has degree 0");
  }
  Entry& e = entries_[start.key()];
  e.r = 1.0;
  enqueue_if_needed(start, e);
}

bool AprState::above_threshold(CoverVertex cv, const Entry& e) const {
  return e.r >= epsilon_ * cover_degree(*graph_, cv);
}

void AprState::enqueue_if_needed(CoverVertex cv, Entry& e) {
  if (!e.queued && above_threshold(cv, e)) {
    e.queued = true;
    queue_.push_back(cv.key());
  }
}

void AprState::push(CoverVertex cv) {
  auto it = entries_.find(cv.key());
  if (it == entries_.end() || it->second.r <= 0.0) {
    throw std::logic_error("dcpush: residual at pushed vertex is zero");
  }
  const double deg = cover_degree(*graph_, cv);
  const double r = it->second.r;
  it->second.p += alpha_ * r;
  it->second.r = (1.0 - alpha_) * r / 2.0;
  if (it->second.r < MassVector::kMassFloor) it->second.r = 0.0;
  const double spread = (1.0 - alpha_) * r / (2.0 * deg);
  for_each_cover_neighbor(*graph_, cv, [&](CoverVertex nb, double w) {
    // Rehashing may invalidate `it`; only nb's entry is touched here.
    Entry& e = entries_[nb.key()];
    e.r += spread * w;
    enqueue_if_needed(nb, e);
  });
  ++pushes_;
  pushed_degree_sum_ += deg;
  Entry& self = entries_[cv.key()];
  enqueue_if_needed(cv, self);
}

bool AprState::step() {
  while (!queue_.empty()) {
    const std::uint64_t key = queue_.front();
    queue_.pop_front();
    Entry& e = entries_[key];
    e.queued = false;
    const CoverVertex cv = CoverVertex::from_key(key);
    if (above_threshold(cv, e)) {
      push(cv);
      return true;
    }
  }
  return false;
}

void AprState::run(const std::function<void(const AprState&)>& after_push) {
  while (step()) {
    if (after_push) after_push(*this);
  }
}

MassVector AprState::pagerank() const {
  MassVector out;
  for (const auto& [key, e] : entries_) {
    if (e.p > 0.0) out.set(CoverVertex::from_key(key), e.p);
  }
  return out;
}

MassVector AprState::residual() const {
  MassVector out;
  for (const auto& [key, e] : entries_) {
    if (e.r > 0.0) out.set(CoverVertex::from_key(key), e.r);
  }
  return out;
}

double AprState::pagerank_at(CoverVertex cv) const {
  auto it = entries_.find(cv.key());
  return it == entries_.end() ? 0.0 : it->second.p;
}

double AprState::residual_at(CoverVertex cv) const {
  auto it = entries_.find(cv.key());
  return it == entries_.end() ? 0.0 : it->second.r;
}

double AprState::max_scaled_residual() const {
  double best = 0.0;
  for (const auto& [key, e] : entries_) {
    const double deg = cover_degree(*graph_, CoverVertex::from_key(key));
    if (deg > 0.0) best = std::max(best, e.r / deg);
  }
  return best;
}

AprResult approximate_pagerank_dc(const Graph& g, Vertex v, double alpha, double epsilon) {
  AprState state(g, v, alpha, epsilon);
  state.run();
  return AprResult{state.pagerank(), state.residual(), state.push_count(),
                   state.pushed_degree_sum(), state.touched()};
}

MassVector simplify(const MassVector& p) {
  MassVector out;
  for (const auto& [cv, m] : p.entries()) {
    const double diff = m - p.get(cv.twin());
    if (diff > 0.0) out.set(cv, diff);
  }
  return out;
}

namespace {

struct SweepEntry {
  CoverVertex cv;
  double ratio;
  double degree;
};

ClusterPair make_pair(const Graph& g, const std::vector<SweepEntry>& order, std::size_t len) {
  std::vector<CoverVertex> members;
  members.reserve(len);
  for (std::size_t i = 0; i < len; ++i) members.push_back(order[i].cv);
  auto [l, r] = to_cluster_pair(CoverSet(std::move(members)));
  ClusterPair pair;
  pair.beta = g.is_directed() ? flow_ratio(g, l, r) : bipartiteness(g, l, r);
  pair.volume = g.is_directed() ? out_volume(g, l) + in_volume(g, r) : volume(g, l) + volume(g, r);
  pair.l = std::move(l);
  pair.r = std::move(r);
  pair.sweep_index = len;
  return pair;
}

}  // namespace

std::optional<ClusterPair> sweep_cut(const Graph& g, const MassVector& p, double beta_target,
                                     SweepMode mode) {
  std::vector<SweepEntry> order;
  order.reserve(p.support_size());
  for (const auto& [cv, m] : p.entries()) {
    const double deg = cover_degree(g, cv);
    if (deg > 0.0) order.push_back(SweepEntry{cv, m / deg, deg});
  }
  if (!is_simple(p.support())) throw std::invalid_argument("sweep_cut: support is not simple");
  // entries() is key-sorted, so a stable sort keeps ties in ascending key order.
  std::stable_sort(order.begin(), order.end(),
                   [](const SweepEntry& a, const SweepEntry& b) { return a.ratio > b.ratio; });

  const double total = cover_total_volume(g);
  absl::flat_hash_set<std::uint64_t> in_prefix;
  in_prefix.reserve(order.size());
  double vol = 0.0;
  double cut = 0.0;
  double best_phi = 2.0;
  std::size_t best_len = 0;
  // Slack for the incremental sum; the candidate is confirmed by recomputation.
  constexpr double kSlack = 1e-9;

  for (std::size_t i = 0; i < order.size(); ++i) {
    const SweepEntry& x = order[i];
    double inside = 0.0;
    for_each_cover_neighbor(g, x.cv, [&](CoverVertex nb, double w) {
      if (in_prefix.contains(nb.key())) inside += w;
    });
    in_prefix.insert(x.cv.key());
    vol += x.degree;
    cut = std::max(0.0, cut + x.degree - 2.0 * inside);
    const double denom = std::min(vol, total - vol);
    if (denom <= 0.0) continue;
    const double phi = cut / denom;
    if (mode == SweepMode::first_qualifying) {
      if (phi <= beta_target + kSlack) {
        ClusterPair pair = make_pair(g, order, i + 1);
        if (pair.beta <= beta_target) return pair;
      }
    } else if (phi < best_phi) {
      best_phi = phi;
      best_len = i + 1;
    }
  }
  if (mode == SweepMode::best && best_len > 0 && best_phi <= beta_target + kSlack) {
    ClusterPair pair = make_pair(g, order, best_len);
    if (pair.beta <= beta_target) return pair;
  }
  return std::nullopt;
}

LocBipartRun loc_bipart_dc_run(const Graph& g, Vertex u, double gamma, double beta_hat,
                               const LocBipartOptions& options) {
  if (g.is_directed()) throw std::invalid_argument("loc_bipart_dc: graph must be undirected");
  if (!(gamma > 0.0)) throw std::invalid_argument("loc_bipart_dc: gamma must be positive");
  if (!(beta_hat > 0.0 && beta_hat <= 1.0)) {
    throw std::invalid_argument("loc_bipart_dc: beta_hat must lie in (0, 1]");
  }
  LocBipartRun run;
  run.alpha = beta_hat * beta_hat / 378.0;
  run.epsilon = 1.0 / (20.0 * gamma);
  AprState state(g, u, run.alpha, run.epsilon);
  state.run();
  const MassVector raw = state.pagerank();
  run.pushes = state.push_count();
  run.support_volume = raw.support_volume(g);
  const MassVector p = simplify(raw);
  run.pair = sweep_cut(g, p, beta_hat, options.sweep);
  return run;
}

std::optional<ClusterPair> loc_bipart_dc(const Graph& g, Vertex u, double gamma, double beta_hat,
                                         const LocBipartOptions& options) {
  return loc_bipart_dc_run(g, u, gamma, beta_hat, options).pair;
}

double beta_hat_for_target(double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("beta_hat_for_target: beta must be nonnegative");
  return std::sqrt(7560.0 * beta);
}

}  // namespace ldc
