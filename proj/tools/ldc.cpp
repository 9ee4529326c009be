// Command-line front end: generate, cluster-bipartite, cluster-directed,
// eval, oracle and bench. Exit codes: 0 ok (a not-found cluster is ok),
// 1 usage, 2 I/O or parse failure, 3 invalid parameters.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldc/bench.hpp"
#include "ldc/cover.hpp"
#include "ldc/esp.hpp"
#include "ldc/generators.hpp"
#include "ldc/io.hpp"
#include "ldc/metrics.hpp"
#include "ldc/oracle.hpp"
#include "ldc/pagerank.hpp"

namespace {

using namespace ldc;
using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultRngSeed = 1;

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kInvalid = 3 };

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string join_ids(const VertexSet& s, const std::vector<std::string>* names) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += names ? (*names)[v] : std::to_string(v);
  }
  return out;
}

Side parse_side(const std::string& s) {
  if (s == "1") return Side::first;
  if (s == "2") return Side::second;
  throw std::invalid_argument("side must be 1 or 2, got '" + s + "'");
}

/// "3:1,5:2" -> {3_1, 5_2}
CoverSet parse_cover_set(const std::string& text) {
  std::vector<CoverVertex> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("cover vertex must look like vertex:side, got '" + item + "'");
    }
    members.push_back(CoverVertex{static_cast<Vertex>(std::stoul(item.substr(0, colon))),
                                  parse_side(item.substr(colon + 1))});
  }
  return CoverSet(std::move(members));
}

std::string cover_set_text(const CoverSet& s) {
  std::string out = "{";
  for (CoverVertex cv : s) {
    if (out.size() > 1) out += ',';
    out += std::to_string(cv.base) + ':' + (cv.side == Side::first ? '1' : '2');
  }
  return out + "}";
}

void print_run(const Graph& g, const RunResult& result, bool json,
               const std::vector<std::string>* names) {
  const Json j = to_json(g, result);
  if (json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "algorithm: " << result.algorithm << '\n'
            << "found: " << (result.found ? "yes" : "no") << '\n';
  if (!result.found) return;
  for (const auto& [key, value] : j["metrics"].items()) std::cout << key << ": " << value << '\n';
  std::cout << "L (" << result.l.size() << "): " << join_ids(result.l, names) << '\n'
            << "R (" << result.r.size() << "): " << join_ids(result.r, names) << '\n';
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::uint64_t seed = kDefaultRngSeed;
  std::string out;
  SbmSpec sbm;
  CbmPlusSpec cbm_plus;
};

void write_generated(const GeneratedGraph& gg, const std::string& out) {
  write_edge_list(gg.graph, out);
  write_labels(gg.labels, labels_path_for(out));
  std::cerr << "wrote " << out << " (n=" << gg.graph.num_vertices() << ", m=" << gg.graph.num_edges()
            << ") and " << labels_path_for(out).string() << '\n';
}

// ---- bench -----------------------------------------------------------------

void print_table1(const Table1Report& r, bool json) {
  if (json) {
    Json j;
    j["n1"] = r.n1;
    j["edges"] = r.edges;
    j["gamma"] = r.gamma;
    j["target_beta"] = r.target_beta;
    j["found"] = r.found;
    j["runs"] = r.trials.size();
    j["mean_ari"] = r.mean_ari;
    j["mean_beta"] = r.mean_beta;
    j["mean_misclassified"] = r.mean_misclassified;
    j["seconds"] = r.seconds;
    j["trials"] = Json::array();
    for (const auto& t : r.trials) {
      j["trials"].push_back({{"seed_vertex", t.seed},
                             {"beta_hat", t.beta_hat},
                             {"found", t.pair.has_value()},
                             {"beta", t.pair ? Json(t.pair->beta) : Json(nullptr)},
                             {"ari", t.ari},
                             {"misclassified", t.misclassified},
                             {"pushes", t.pushes},
                             {"seconds", t.seconds}});
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::printf("SBM n1=%zu  edges=%zu  beta(C1,C2)=%.3f  gamma=%.0f\n", r.n1, r.edges, r.target_beta,
              r.gamma);
  std::printf("%8s %8s %6s %8s %8s %8s %10s\n", "seed", "b_hat", "found", "beta", "ARI", "misc", "seconds");
  for (const auto& t : r.trials) {
    std::printf("%8u %8.3f %6s %8.4f %8.4f %8.4f %10.3f\n", t.seed, t.beta_hat, t.pair ? "yes" : "no",
                t.pair ? t.pair->beta : 1.0, t.ari, t.misclassified, t.seconds);
  }
  std::printf("mean over %zu runs (%zu found): beta %.3f  ARI %.3f  misclassified %.3f  total %.2fs\n",
              r.trials.size(), r.found, r.mean_beta, r.mean_ari, r.mean_misclassified, r.seconds);
  const char* reference = r.n1 == 1000    ? "0.154 / 0.968 / 0.073"
                          : r.n1 == 10000 ? "0.215 / 0.940 / 0.145"
                          : r.n1 == 100000 ? "0.250 / 0.950 / 0.166"
                                          : nullptr;
  if (reference) std::printf("published beta / ARI / misclassified: %s\n", reference);
}

void print_table2(const Table2Report& r, bool json) {
  if (json) {
    Json j;
    j["edges"] = r.edges;
    j["target_flow"] = r.target_flow;
    j["steps"] = r.steps;
    j["found"] = r.found;
    j["runs"] = r.trials.size();
    j["mean_ari"] = r.mean_ari;
    j["mean_flow"] = r.mean_flow;
    j["seconds"] = r.seconds;
    j["trials"] = Json::array();
    for (const auto& t : r.trials) {
      const auto& p = t.run.pair;
      j["trials"].push_back({{"seed_vertex", t.seed},
                             {"rng_seed", t.rng_seed},
                             {"found", p.has_value()},
                             {"side", p ? Json(p->side == Side::first ? 1 : 2) : Json(nullptr)},
                             {"flow", p ? Json(p->flow) : Json(nullptr)},
                             {"ari", t.ari},
                             {"seconds", t.seconds}});
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::printf("CBM+ edges=%zu  F(C_k+1, C_k+2)=%.4f  T=%zu\n", r.edges, r.target_flow, r.steps);
  std::printf("%8s %6s %6s %8s %8s %10s\n", "seed", "found", "side", "flow", "ARI", "seconds");
  for (const auto& t : r.trials) {
    const auto& p = t.run.pair;
    std::printf("%8u %6s %6s %8.4f %8.4f %10.3f\n", t.seed, p ? "yes" : "no",
                p ? (p->side == Side::first ? "1" : "2") : "-", p ? p->flow : 1.0, t.ari, t.seconds);
  }
  std::printf("mean over %zu runs (%zu found): flow %.4f  ARI %.3f  total %.2fs\n", r.trials.size(),
              r.found, r.mean_flow, r.mean_ari, r.seconds);
  std::printf("published ARI: 0.98\n");
}

int run(int argc, char** argv) {
  CLI::App app{"Local clustering of densely connected pairs (undirected) and flow pairs (directed)"};
  app.require_subcommand(1);

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a synthetic graph and its labels");
  generate->require_subcommand(1);
  auto add_common_gen = [&](CLI::App* sub) {
    sub->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    sub->add_option("-o,--output", gen.out, "Edge list path; labels go to <path>.labels")->required();
  };
  auto* gen_sbm_cmd = generate->add_subcommand("sbm", "Three-block model: C1, C2 planted pair, C3 ten times larger");
  gen_sbm_cmd->add_option("--n1", gen.sbm.n1, "Size of C1 and C2")->capture_default_str();
  gen_sbm_cmd->add_option("--p1", gen.sbm.p1, "Edge probability inside C1 and C2")->capture_default_str();
  gen_sbm_cmd->add_option("--q1", gen.sbm.q1, "Edge probability between C1 and C2")->capture_default_str();
  add_common_gen(gen_sbm_cmd);
  auto add_cbm_flags = [&](CLI::App* sub) {
    CbmSpec& c = gen.cbm_plus.base;
    sub->add_option("--k", c.k, "Number of clusters on the cycle")->capture_default_str();
    sub->add_option("--n", c.n, "Cluster size")->capture_default_str();
    sub->add_option("--p", c.p, "Edge probability inside a cluster")->capture_default_str();
    sub->add_option("--q", c.q, "Edge probability between consecutive clusters")->capture_default_str();
    sub->add_option("--eta", c.eta, "Probability a cycle edge points forward")->capture_default_str();
  };
  auto* gen_cbm_cmd = generate->add_subcommand("cbm", "Cyclic block model (directed)");
  add_cbm_flags(gen_cbm_cmd);
  add_common_gen(gen_cbm_cmd);
  auto* gen_cbm_plus_cmd = generate->add_subcommand("cbm+", "Cyclic block model plus a planted local pair");
  add_cbm_flags(gen_cbm_plus_cmd);
  gen_cbm_plus_cmd->add_option("--n-local", gen.cbm_plus.n_local, "Size of each local cluster")->capture_default_str();
  gen_cbm_plus_cmd->add_option("--q1-local", gen.cbm_plus.q1_local, "Edge probability between the local clusters")->capture_default_str();
  gen_cbm_plus_cmd->add_option("--q2-local", gen.cbm_plus.q2_local, "Edge probability between a local cluster and C1")->capture_default_str();
  gen_cbm_plus_cmd->add_option("--eta-local", gen.cbm_plus.eta_local, "Orientation bias of local-to-C1 edges")->capture_default_str();
  add_common_gen(gen_cbm_plus_cmd);

  // cluster-bipartite
  std::string graph_path;
  std::string names_path;
  Vertex seed_vertex = 0;
  double gamma = 0.0;
  double beta_hat = 0.0;
  bool best_sweep = false;
  bool json = false;
  auto* bip = app.add_subcommand("cluster-bipartite", "Find a densely connected pair L, R around a seed (undirected)");
  bip->add_option("-g,--graph", graph_path, "Undirected edge list")->required();
  bip->add_option("--seed-vertex", seed_vertex, "Starting vertex")->required();
  bip->add_option("--gamma", gamma, "Target volume bound")->required();
  bip->add_option("--beta", beta_hat, "Target bipartiteness in (0, 1]")->required();
  bip->add_flag("--best-sweep", best_sweep, "Return the lowest-conductance sweep prefix instead of the first qualifying one");
  bip->add_option("--names", names_path, "Optional `vertex name` sidecar for text output");
  bip->add_flag("--json", json, "Print the run as JSON");

  // cluster-directed
  std::string side_text = "both";
  double phi = 0.0;
  std::uint64_t rng_seed = kDefaultRngSeed;
  bool flow_matrix = false;
  auto* dir = app.add_subcommand("cluster-directed", "Find a flow pair L -> R around a seed (directed)");
  dir->add_option("-g,--graph", graph_path, "Directed edge list, or j,l,count CSV with --flow-matrix")->required();
  dir->add_flag("--flow-matrix", flow_matrix, "Read the graph as a pairwise flow matrix");
  dir->add_option("--seed-vertex", seed_vertex, "Starting vertex")->required();
  dir->add_option("--side", side_text, "Seed copy: 1 (seed in L), 2 (seed in R) or both (keep lower flow ratio)")
      ->check(CLI::IsMember({"1", "2", "both"}))
      ->capture_default_str();
  dir->add_option("--phi", phi, "Target flow ratio in (0, 1]; sets T = max(1, floor(1 / (100 phi^(2/3))))")->required();
  dir->add_option("--rng-seed", rng_seed, "Random seed")->capture_default_str();
  dir->add_option("--names", names_path, "Optional `vertex name` sidecar for text output");
  dir->add_flag("--json", json, "Print the run as JSON");

  // eval
  std::string result_path;
  std::string labels_path;
  std::vector<std::uint32_t> clusters{0, 1};
  auto* eval = app.add_subcommand(
      "eval",
      "Score a JSON run against ground-truth labels. ARI uses three labels (L or C_a, R or C_b, "
      "everything else); the misclassified ratio takes the better of the two orientations");
  eval->add_option("--output", result_path, "JSON written by cluster-bipartite/cluster-directed --json")->required();
  eval->add_option("--labels", labels_path, "Labels sidecar")->required();
  eval->add_option("--clusters", clusters, "The two ground-truth labels forming the target pair")
      ->expected(2)
      ->delimiter(',')
      ->capture_default_str();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact references on small graphs");
  oracle->require_subcommand(1);
  bool directed = false;
  double alpha = 0.1;
  std::string side_one = "1";
  bool base_walk = false;
  auto* opr = oracle->add_subcommand("pagerank", "Dense personalized Pagerank on the cover (or the graph with --base)");
  opr->add_option("-g,--graph", graph_path, "Edge list")->required();
  opr->add_flag("--directed", directed, "Read the edge list as directed");
  opr->add_option("--seed-vertex", seed_vertex, "Seed vertex")->required();
  opr->add_option("--side", side_one, "Seed copy")->check(CLI::IsMember({"1", "2"}))->capture_default_str();
  opr->add_option("--alpha", alpha, "Teleport probability")->capture_default_str();
  opr->add_flag("--base", base_walk, "Walk on the graph itself instead of its cover");
  std::string set_text;
  auto* okernel = oracle->add_subcommand("kernel", "Exact one-step evolving set kernel from a cover set");
  okernel->add_option("-g,--graph", graph_path, "Edge list")->required();
  okernel->add_flag("--directed", directed, "Read the edge list as directed");
  okernel->add_option("--set", set_text, "Start set, e.g. 0:1,3:2")->required();
  double epsilon = 1e-4;
  bool simplified = false;
  auto* ols = oracle->add_subcommand("ls-curve", "Lovasz-Simonovits curve of the approximate Pagerank vector");
  ols->add_option("-g,--graph", graph_path, "Undirected edge list")->required();
  ols->add_option("--seed-vertex", seed_vertex, "Seed vertex")->required();
  ols->add_option("--alpha", alpha, "Teleport probability")->capture_default_str();
  ols->add_option("--epsilon", epsilon, "Push threshold")->capture_default_str();
  ols->add_flag("--simplify", simplified, "Apply the simplify operator first");

  // bench
  auto* bench = app.add_subcommand("bench", "Synthetic experiments with a comparison to published numbers");
  bench->require_subcommand(1);
  Table1Options t1;
  std::optional<double> p1_override;
  std::optional<double> q1_override;
  auto* bt1 = bench->add_subcommand("table1", "Undirected SBM experiment (p1 = 1/n1 and q1 = 18/n1 unless given)");
  bt1->add_option("--n1", t1.spec.n1, "Size of C1 and C2")->capture_default_str();
  bt1->add_option("--p1", p1_override, "Override p1");
  bt1->add_option("--q1", q1_override, "Override q1");
  bt1->add_option("--runs", t1.runs, "Number of seeds")->capture_default_str();
  bt1->add_option("--graph-seed", t1.graph_seed, "Generator seed")->capture_default_str();
  bt1->add_option("--rng-seed", t1.trial_seed, "Seed-vertex sampling seed")->capture_default_str();
  bt1->add_option("--beta-ladder", t1.beta_ladder, "beta_hat values tried in order until one returns")
      ->delimiter(',')
      ->capture_default_str();
  bt1->add_option("--gamma-fraction", t1.gamma_fraction, "gamma as a fraction of vol(C1 u C2)")->capture_default_str();
  bt1->add_flag("--best-sweep", best_sweep, "Use the lowest-conductance sweep prefix");
  bt1->add_option("--threads", t1.threads, "Worker threads (0: all cores)")->capture_default_str();
  bt1->add_flag("--json", json, "Print JSON");
  Table2Options t2;
  auto* bt2 = bench->add_subcommand("table2", "Directed CBM+ experiment with --side both");
  bt2->add_option("--k", t2.spec.base.k, "Clusters on the cycle")->capture_default_str();
  bt2->add_option("--n", t2.spec.base.n, "Cluster size")->capture_default_str();
  bt2->add_option("--n-local", t2.spec.n_local, "Local cluster size")->capture_default_str();
  bt2->add_option("--phi", t2.phi, "Target flow ratio")->capture_default_str();
  bt2->add_option("--runs", t2.runs, "Number of seeds")->capture_default_str();
  bt2->add_option("--graph-seed", t2.graph_seed, "Generator seed")->capture_default_str();
  bt2->add_option("--rng-seed", t2.trial_seed, "Seed sampling and process seed")->capture_default_str();
  bt2->add_option("--threads", t2.threads, "Worker threads (0: all cores)")->capture_default_str();
  bt2->add_flag("--json", json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  auto load_names_if_any = [&](const Graph& g) -> std::optional<std::vector<std::string>> {
    if (names_path.empty()) return std::nullopt;
    return load_names(names_path, g.num_vertices());
  };

  if (generate->parsed()) {
    if (gen_sbm_cmd->parsed()) write_generated(gen_sbm(gen.sbm, gen.seed), gen.out);
    if (gen_cbm_cmd->parsed()) write_generated(gen_cbm(gen.cbm_plus.base, gen.seed), gen.out);
    if (gen_cbm_plus_cmd->parsed()) write_generated(gen_cbm_plus(gen.cbm_plus, gen.seed), gen.out);
    return kOk;
  }

  if (bip->parsed()) {
    const Graph g = load_edge_list(graph_path, false);
    const auto names = load_names_if_any(g);
    const auto t0 = std::chrono::steady_clock::now();
    LocBipartOptions options;
    options.sweep = best_sweep ? SweepMode::best : SweepMode::first_qualifying;
    const LocBipartRun lb = loc_bipart_dc_run(g, seed_vertex, gamma, beta_hat, options);
    RunResult result;
    result.wall_ms = elapsed_ms(t0);
    result.algorithm = "loc_bipart_dc";
    result.seed_vertex = seed_vertex;
    result.parameters = {{"gamma", gamma},
                         {"beta_hat", beta_hat},
                         {"alpha", lb.alpha},
                         {"epsilon", lb.epsilon},
                         {"sweep", best_sweep ? "best" : "first"}};
    result.rng_seed = 0;
    result.found = lb.pair.has_value();
    if (lb.pair) {
      result.l = lb.pair->l;
      result.r = lb.pair->r;
    }
    print_run(g, result, json, names ? &*names : nullptr);
    return kOk;
  }

  if (dir->parsed()) {
    const Graph g = flow_matrix ? load_flow_matrix(graph_path) : load_edge_list(graph_path, true);
    const auto names = load_names_if_any(g);
    const auto t0 = std::chrono::steady_clock::now();
    EvoCutRun run;
    if (side_text == "both") {
      run = evo_cut_directed_both(g, seed_vertex, phi, rng_seed);
    } else {
      Rng rng(rng_seed);
      run = evo_cut_directed_run(g, seed_vertex, parse_side(side_text), phi, rng);
    }
    RunResult result;
    result.wall_ms = elapsed_ms(t0);
    result.algorithm = "evo_cut_directed";
    result.seed_vertex = seed_vertex;
    result.parameters = {{"phi", phi},
                         {"side", side_text},
                         {"side_used", run.pair ? Json(run.pair->side == Side::first ? 1 : 2) : Json(nullptr)},
                         {"steps", run.steps}};
    result.rng_seed = rng_seed;
    result.found = run.pair.has_value();
    if (run.pair) {
      result.l = run.pair->l;
      result.r = run.pair->r;
    }
    print_run(g, result, json, names ? &*names : nullptr);
    return kOk;
  }

  if (eval->parsed()) {
    std::ifstream in(result_path);
    if (!in) throw IoError("cannot open " + result_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(result_path, 0, e.what());
    }
    const RunResult result = run_result_from_json(j);
    const std::size_t n = j.at("graph").at("n").get<std::size_t>();
    const auto labels = load_labels(labels_path, n);
    const VertexSet ca = cluster_members(labels, clusters[0]);
    const VertexSet cb = cluster_members(labels, clusters[1]);
    Labeling truth(n, kOutsideLabel);
    for (Vertex v : ca) truth[v] = 1;
    for (Vertex v : cb) truth[v] = 2;
    const double ari = adjusted_rand_index(truth, pair_labeling(n, result.l, result.r));
    const double mis = misclassified_ratio(result.l, result.r, ca, cb);
    std::printf("found: %s\nARI: %.6f\nmisclassified_ratio: %.6f\n", result.found ? "yes" : "no", ari, mis);
    return kOk;
  }

  if (opr->parsed()) {
    const Graph g = load_edge_list(graph_path, directed);
    if (base_walk) {
      g.check_vertex(seed_vertex);
      DenseVector s(g.num_vertices(), 0.0);
      s[seed_vertex] = 1.0;
      const DenseVector pr = exact_pagerank(g, false, alpha, s);
      for (std::size_t v = 0; v < pr.size(); ++v) std::printf("%zu %.17g\n", v, pr[v]);
    } else {
      const DenseVector pr =
          exact_pagerank(g, true, alpha, cover_indicator(g, CoverVertex{seed_vertex, parse_side(side_one)}));
      for (std::size_t k = 0; k < pr.size(); ++k) {
        const CoverVertex cv = CoverVertex::from_key(k);
        std::printf("%u %d %.17g\n", cv.base, cv.side == Side::first ? 1 : 2, pr[k]);
      }
    }
    return kOk;
  }

  if (okernel->parsed()) {
    const Graph g = load_edge_list(graph_path, directed);
    const CoverSet s = parse_cover_set(set_text);
    std::printf("%-40s %12s %12s\n", "next set", "K", "K_hat");
    for (const KernelEntry& e : exact_esp_kernel(g, s)) {
      std::printf("%-40s %12.8f %12.8f\n", cover_set_text(e.next).c_str(), e.k, e.k_hat);
    }
    return kOk;
  }

  if (ols->parsed()) {
    const Graph g = load_edge_list(graph_path, false);
    const AprResult apr = approximate_pagerank_dc(g, seed_vertex, alpha, epsilon);
    const LsCurve curve(g, simplified ? simplify(apr.p) : apr.p);
    for (const auto& [x, y] : curve.points()) std::printf("%.17g %.17g\n", x, y);
    return kOk;
  }

  if (bt1->parsed()) {
    t1.spec.p1 = p1_override.value_or(1.0 / static_cast<double>(t1.spec.n1));
    t1.spec.q1 = q1_override.value_or(18.0 / static_cast<double>(t1.spec.n1));
    t1.sweep = best_sweep ? SweepMode::best : SweepMode::first_qualifying;
    print_table1(run_table1(t1), json);
    return kOk;
  }

  if (bt2->parsed()) {
    print_table2(run_table2(t2), json);
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ldc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kIo;
  } catch (const ldc::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad result file: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::length_error& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kInvalid;
  }
}
