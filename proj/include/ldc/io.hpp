#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldc/graph.hpp"

namespace ldc {

/// Malformed input file. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// File could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge list: one `u v [w]` per line, `#` starts a comment, ids are 0-based.
/// A `# vertices: N` comment fixes the vertex count (otherwise max id + 1),
/// so trailing isolated vertices survive a round trip.
Graph load_edge_list(const std::filesystem::path& path, bool directed);
Graph parse_edge_list(const std::string& text, bool directed, const std::string& origin = "<text>");

/// Canonical form: the vertex-count comment, then edges sorted by (u, v),
/// undirected edges with u < v, weights in shortest round-trip notation.
std::string format_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

/// CSV rows `j,l,count`. Builds the digraph with an arc from the larger
/// flow direction, weight |M_jl - M_lj| / (M_jl + M_lj); balanced pairs
/// give no arc. A non-numeric first row is taken as a header.
Graph load_flow_matrix(const std::filesystem::path& path);
Graph parse_flow_matrix(const std::string& text, const std::string& origin = "<text>");

/// Labels sidecar: `vertex label` lines covering every vertex once.
std::vector<std::uint32_t> load_labels(const std::filesystem::path& path, std::size_t n);
void write_labels(const std::vector<std::uint32_t>& labels, const std::filesystem::path& path);

/// Names sidecar: `vertex name...` lines; missing vertices get their id.
std::vector<std::string> load_names(const std::filesystem::path& path, std::size_t n);

std::filesystem::path labels_path_for(const std::filesystem::path& graph_path);

struct GraphFingerprint {
  std::size_t n = 0;
  std::size_t m = 0;
  /// FNV-1a over the canonical edge list (ids and weight bit patterns).
  std::uint64_t hash = 0;
};

GraphFingerprint fingerprint(const Graph& g);

/// One clustering run. Metrics are not stored here; to_json recomputes them
/// from the graph and (l, r).
struct RunResult {
  std::string algorithm;
  Vertex seed_vertex = 0;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  bool found = false;
  VertexSet l;
  VertexSet r;
  std::uint64_t rng_seed = 0;
  double wall_ms = 0.0;
};

/// Fields, in order: algorithm, found, seed_vertex, parameters, rng_seed,
/// L, R, metrics, graph, wall_ms. metrics holds beta (undirected) or flow
/// and cut_imbalance (directed), volume and cover_conductance; it is null
/// when found is false.
nlohmann::ordered_json to_json(const Graph& g, const RunResult& result);

/// Reads algorithm, found, seed_vertex, parameters, rng_seed, L, R and wall_ms.
RunResult run_result_from_json(const nlohmann::json& j);

}  // namespace ldc
