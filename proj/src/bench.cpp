#include "ldc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "ldc/metrics.hpp"

namespace ldc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

/// Uniform draws from members, skipping vertices without arcs.
std::vector<Vertex> draw_seeds(const Graph& g, const VertexSet& members, std::size_t count,
                               std::uint64_t seed) {
  std::vector<Vertex> usable;
  for (Vertex v : members) {
    if (g.out_degree(v) > 0.0 || g.in_degree(v) > 0.0) usable.push_back(v);
  }
  if (usable.empty()) throw std::invalid_argument("bench: no seed candidates with positive degree");
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
  std::vector<Vertex> out(count);
  for (auto& v : out) v = usable[pick(rng)];
  return out;
}

Labeling truth_labeling(const std::vector<std::uint32_t>& labels, std::uint32_t a,
                        std::uint32_t b) {
  Labeling truth(labels.size(), kOutsideLabel);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == a) truth[v] = 1;
    if (labels[v] == b) truth[v] = 2;
  }
  return truth;
}

}  // namespace

Table1Report run_table1(const Table1Options& options) {
  if (options.beta_ladder.empty()) throw std::invalid_argument("table1: empty beta ladder");
  if (!(options.gamma_fraction > 0.0)) throw std::invalid_argument("table1: gamma fraction must be positive");
  const auto t0 = Clock::now();
  const GeneratedGraph gg = gen_sbm(options.spec, options.graph_seed);
  const Graph& g = gg.graph;
  const VertexSet c1 = cluster_members(gg.labels, 0);
  const VertexSet c2 = cluster_members(gg.labels, 1);
  const Labeling truth = truth_labeling(gg.labels, 0, 1);

  Table1Report report;
  report.n1 = options.spec.n1;
  report.edges = g.num_edges();
  report.gamma = options.gamma_fraction * (volume(g, c1) + volume(g, c2));
  report.target_beta = bipartiteness(g, c1, c2);

  const std::vector<Vertex> seeds =
      draw_seeds(g, c1.united(c2), options.runs, options.trial_seed);
  report.trials.resize(options.runs);
  parallel_for(options.runs, options.threads, [&](std::size_t i) {
    Table1Trial& trial = report.trials[i];
    trial.seed = seeds[i];
    const auto start = Clock::now();
    const LocBipartOptions lb{options.sweep};
    for (double beta_hat : options.beta_ladder) {
      trial.beta_hat = beta_hat;
      LocBipartRun run = loc_bipart_dc_run(g, trial.seed, report.gamma, beta_hat, lb);
      trial.pushes += run.pushes;
      trial.support_bound_ratio =
          std::max(trial.support_bound_ratio, run.support_volume * run.epsilon * run.alpha);
      if (run.pair) {
        trial.pair = std::move(run.pair);
        break;
      }
    }
    trial.seconds = seconds_since(start);
    if (trial.pair) {
      const ClusterPair& p = *trial.pair;
      trial.contract_ok = p.l.disjoint(p.r) && p.beta <= trial.beta_hat &&
                          bipartiteness(g, p.l, p.r) == p.beta;
      trial.ari = adjusted_rand_index(truth, pair_labeling(g.num_vertices(), p.l, p.r));
      trial.misclassified = misclassified_ratio(p.l, p.r, c1, c2);
    } else {
      trial.ari = adjusted_rand_index(truth, Labeling(g.num_vertices(), kOutsideLabel));
      trial.misclassified = misclassified_ratio({}, {}, c1, c2);
    }
  });

  double beta_sum = 0.0;
  for (const Table1Trial& t : report.trials) {
    report.mean_ari += t.ari;
    report.mean_misclassified += t.misclassified;
    report.contracts_ok = report.contracts_ok && t.contract_ok;
    if (t.pair) {
      ++report.found;
      beta_sum += t.pair->beta;
    }
  }
  const auto runs = static_cast<double>(std::max<std::size_t>(options.runs, 1));
  report.mean_ari /= runs;
  report.mean_misclassified /= runs;
  report.mean_beta = report.found > 0 ? beta_sum / static_cast<double>(report.found) : 1.0;
  report.seconds = seconds_since(t0);
  return report;
}

Table2Report run_table2(const Table2Options& options) {
  const auto t0 = Clock::now();
  const GeneratedGraph gg = gen_cbm_plus(options.spec, options.graph_seed);
  const Graph& g = gg.graph;
  const auto first = static_cast<std::uint32_t>(options.spec.base.k);
  const VertexSet ca = cluster_members(gg.labels, first);
  const VertexSet cb = cluster_members(gg.labels, first + 1);
  const Labeling truth = truth_labeling(gg.labels, first, first + 1);

  Table2Report report;
  report.edges = g.num_edges();
  report.target_flow = flow_ratio(g, ca, cb);
  report.steps = evo_cut_steps(options.phi);

  const std::vector<Vertex> seeds = draw_seeds(g, ca.united(cb), options.runs, options.trial_seed);
  Rng seed_rng(options.trial_seed ^ 0x5deece66dULL);
  report.trials.resize(options.runs);
  for (auto& t : report.trials) t.rng_seed = seed_rng();

  parallel_for(options.runs, options.threads, [&](std::size_t i) {
    Table2Trial& trial = report.trials[i];
    trial.seed = seeds[i];
    const auto start = Clock::now();
    trial.run = evo_cut_directed_both(g, trial.seed, options.phi, trial.rng_seed,
                                      [&](const EvoCutRun& side_run) {
                                        trial.cleanup_ok = trial.cleanup_ok && cleanup_bound_holds(side_run);
                                      });
    trial.seconds = seconds_since(start);
    const auto& pair = trial.run.pair;
    trial.ari = pair ? adjusted_rand_index(truth, pair_labeling(g.num_vertices(), pair->l, pair->r))
                     : adjusted_rand_index(truth, Labeling(g.num_vertices(), kOutsideLabel));
  });

  double flow_sum = 0.0;
  for (const Table2Trial& t : report.trials) {
    report.mean_ari += t.ari;
    report.cleanup_ok = report.cleanup_ok && t.cleanup_ok;
    if (t.run.pair) {
      ++report.found;
      flow_sum += t.run.pair->flow;
    }
  }
  report.mean_ari /= static_cast<double>(std::max<std::size_t>(options.runs, 1));
  report.mean_flow = report.found > 0 ? flow_sum / static_cast<double>(report.found) : 1.0;
  report.seconds = seconds_since(t0);
  return report;
}

}  // namespace ldc
