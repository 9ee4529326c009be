#include "ldc/esp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldc {

namespace {

std::size_t cover_arc_count(const Graph& g, CoverVertex cv) {
  return cv.side == Side::first ? g.out_arcs(cv.base).size() : g.in_arcs(cv.base).size();
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace

EspState::EspState(const Graph& g, CoverVertex seed) : graph_(&g), walker_(seed) {
  g.check_vertex(seed.base);
  if (cover_degree(g, seed) <= 0.0) {
    throw std::invalid_argument("evolving set: seed has zero cover degree");
  }
  insert(seed);
}

EspState::EspState(const Graph& g, const CoverSet& start, Rng& rng) : graph_(&g) {
  for (CoverVertex cv : start) {
    g.check_vertex(cv.base);
    insert(cv);
  }
  if (volume_ <= 0.0) throw std::invalid_argument("evolving set: start set has zero volume");
  double target = uniform01(rng) * volume_;
  walker_ = start.members().back();
  for (CoverVertex cv : start) {
    const double deg = cover_degree(g, cv);
    if (deg <= 0.0) continue;
    if (target < deg) {
      walker_ = cv;
      break;
    }
    target -= deg;
  }
  if (cover_degree(g, walker_) <= 0.0) {
    // Rounding fell off the end; take the last member with positive degree.
    for (auto it = start.members().rbegin(); it != start.members().rend(); ++it) {
      if (cover_degree(g, *it) > 0.0) {
        walker_ = *it;
        break;
      }
    }
  }
}

void EspState::insert(CoverVertex x) {
  Entry& e = entries_[x.key()];
  if (e.member) return;
  e.member = true;
  ++set_size_;
  volume_ += cover_degree(*graph_, x);
  internal_ += 2.0 * e.inner;
  for_each_cover_neighbor(*graph_, x, [&](CoverVertex y, double w) {
    Entry& ey = entries_[y.key()];
    ey.inner += w;
    ++ey.hits;
  });
}

void EspState::remove(CoverVertex x) {
  auto it = entries_.find(x.key());
  if (it == entries_.end() || !it->second.member) return;
  it->second.member = false;
  --set_size_;
  volume_ -= cover_degree(*graph_, x);
  internal_ -= 2.0 * it->second.inner;
  for_each_cover_neighbor(*graph_, x, [&](CoverVertex y, double w) {
    auto jt = entries_.find(y.key());
    Entry& ey = jt->second;
    ey.inner -= w;
    if (--ey.hits == 0) {
      ey.inner = 0.0;
      if (!ey.member) entries_.erase(jt);
    }
  });
  auto self = entries_.find(x.key());
  if (self != entries_.end() && self->second.hits == 0) entries_.erase(self);
  if (set_size_ == 0) {
    volume_ = 0.0;
    internal_ = 0.0;
  }
}

double EspState::q_of(CoverVertex y, const Entry& e) const {
  const double deg = cover_degree(*graph_, y);
  if (deg <= 0.0) return e.member ? 1.0 : 0.0;
  const double self = e.member ? 0.5 : 0.0;
  if (e.hits == cover_arc_count(*graph_, y)) return self + 0.5;
  return self + 0.5 * std::min(1.0, e.inner / deg);
}

double EspState::membership_probability(CoverVertex y) const {
  auto it = entries_.find(y.key());
  return it == entries_.end() ? 0.0 : q_of(y, it->second);
}

bool EspState::contains(CoverVertex y) const {
  auto it = entries_.find(y.key());
  return it != entries_.end() && it->second.member;
}

CoverSet EspState::current_set() const {
  std::vector<CoverVertex> members;
  members.reserve(set_size_);
  for (const auto& [key, e] : entries_) {
    if (e.member) members.push_back(CoverVertex::from_key(key));
  }
  return CoverSet(std::move(members));
}

std::optional<double> EspState::conductance() const {
  const double total = cover_total_volume(*graph_);
  const double denom = std::min(volume_, total - volume_);
  if (denom <= 1e-12 * total) return std::nullopt;
  return std::max(0.0, volume_ - internal_) / denom;
}

CoverVertex EspState::walk_step(CoverVertex x, Rng& rng) const {
  const double deg = cover_degree(*graph_, x);
  if (deg <= 0.0 || uniform01(rng) < 0.5) return x;
  double target = uniform01(rng) * deg;
  CoverVertex next = x;
  bool chosen = false;
  for_each_cover_neighbor(*graph_, x, [&](CoverVertex y, double w) {
    if (chosen) return;
    next = y;
    if (target < w) {
      chosen = true;
    } else {
      target -= w;
    }
  });
  return next;
}

void EspState::step(Rng& rng) {
  walker_ = walk_step(walker_, rng);
  const double qx = membership_probability(walker_);
  if (!(qx > 0.0)) throw std::logic_error("evolving set: walker left the one-hop neighbourhood");
  // 1 - uniform[0, 1) lies in (0, 1], so the threshold lies in (0, qx].
  const double threshold = qx * (1.0 - uniform01(rng));

  std::vector<CoverVertex> leaving;
  std::vector<CoverVertex> joining;
  for (const auto& [key, e] : entries_) {
    const CoverVertex y = CoverVertex::from_key(key);
    const bool keep = q_of(y, e) >= threshold;
    if (e.member && !keep) leaving.push_back(y);
    if (!e.member && keep) joining.push_back(y);
  }
  // Hash order differs between tables; sort so the float sums are reproducible.
  std::sort(leaving.begin(), leaving.end());
  std::sort(joining.begin(), joining.end());
  for (CoverVertex y : leaving) remove(y);
  for (CoverVertex y : joining) insert(y);
  ++steps_;
  if (!contains(walker_)) throw std::logic_error("evolving set: coupling invariant violated");
}

EspSample generate_sample(const Graph& g, CoverVertex seed, std::size_t steps, Rng& rng) {
  EspState state(g, seed);
  EspSample sample;
  sample.min_set = CoverSet{seed};
  sample.min_conductance = state.conductance().value_or(1.0);
  for (std::size_t t = 0; t < steps; ++t) {
    state.step(rng);
    const auto phi = state.conductance();
    if (phi && *phi < sample.min_conductance) {
      sample.min_conductance = *phi;
      sample.min_set = state.current_set();
    }
  }
  sample.final_set = state.current_set();
  sample.steps = state.steps();
  return sample;
}

std::size_t evo_cut_steps(double phi) {
  if (!(phi > 0.0 && phi <= 1.0)) throw std::invalid_argument("evo_cut: phi must lie in (0, 1]");
  // pow(1e-6, 2/3) lands just above 1e-4; the relative nudge keeps exact
  // quotients from flooring one short.
  const double t = std::floor(1.0 / (100.0 * std::pow(phi, 2.0 / 3.0)) * (1.0 + 1e-12));
  return t < 1.0 ? 1 : static_cast<std::size_t>(t);
}

namespace {

std::optional<double> safe_cover_conductance(const Graph& g, const CoverSet& s) {
  if (s.empty() || s.size() == 2 * g.num_vertices()) return std::nullopt;
  const double vol = cover_volume(g, s);
  if (std::min(vol, cover_total_volume(g) - vol) <= 0.0) return std::nullopt;
  return conductance_in_cover(g, s);
}

}  // namespace

EvoCutRun evo_cut_directed_run(const Graph& g, Vertex u, Side side, double phi, Rng& rng) {
  if (!g.is_directed()) throw std::invalid_argument("evo_cut_directed: graph must be directed");
  g.check_vertex(u);
  const CoverVertex seed{u, side};
  if (cover_degree(g, seed) <= 0.0) {
    throw std::invalid_argument("evo_cut_directed: seed vertex " + std::to_string(u) +
                                " has no arcs on side " +
                                std::to_string(side == Side::first ? 1 : 2));
  }
  EvoCutRun run;
  run.steps = evo_cut_steps(phi);
  run.sample = generate_sample(g, seed, run.steps, rng).final_set;
  run.simplicity_epsilon = simplicity_epsilon(g, run.sample);
  run.sample_conductance = safe_cover_conductance(g, run.sample);
  const CoverSet cleaned = epsilon_simple_cleanup(run.sample);
  run.cleaned_conductance = safe_cover_conductance(g, cleaned);

  auto [l, r] = to_cluster_pair(cleaned);
  const double denom = out_volume(g, l) + in_volume(g, r);
  if ((l.empty() && r.empty()) || denom <= 0.0) return run;
  DirectedClusterPair pair;
  pair.flow = flow_ratio(g, l, r);
  pair.volume = denom;
  pair.l = std::move(l);
  pair.r = std::move(r);
  pair.steps_used = run.steps;
  pair.side = side;
  run.pair = std::move(pair);
  return run;
}

std::optional<DirectedClusterPair> evo_cut_directed(const Graph& g, Vertex u, Side side,
                                                    double phi, Rng& rng) {
  return evo_cut_directed_run(g, u, side, phi, rng).pair;
}

EvoCutRun evo_cut_directed_both(const Graph& g, Vertex u, double phi, std::uint64_t seed,
                                const std::function<void(const EvoCutRun&)>& on_run) {
  std::seed_seq second_seed{seed, std::uint64_t{0x9e3779b97f4a7c15ULL}};
  Rng rng_first(seed);
  Rng rng_second(second_seed);
  std::optional<EvoCutRun> best;
  for (Side side : {Side::first, Side::second}) {
    if (cover_degree(g, CoverVertex{u, side}) <= 0.0) continue;
    EvoCutRun run =
        evo_cut_directed_run(g, u, side, phi, side == Side::first ? rng_first : rng_second);
    if (on_run) on_run(run);
    if (!best || (run.pair && (!best->pair || run.pair->flow < best->pair->flow))) {
      best = std::move(run);
    }
  }
  if (!best) {
    throw std::invalid_argument("evo_cut_directed: seed vertex " + std::to_string(u) +
                                " has no arcs");
  }
  return std::move(*best);
}

bool cleanup_bound_holds(const EvoCutRun& run) {
  const double eps = run.simplicity_epsilon;
  if (eps >= 1.0 || !run.sample_conductance || !run.cleaned_conductance) return true;
  return *run.cleaned_conductance <= (*run.sample_conductance + eps) / (1.0 - eps) + 1e-12;
}

}  // namespace ldc
