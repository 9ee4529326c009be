#include "ldc/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string_view>

#include "ldc/cover.hpp"

namespace ldc {

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? path + ":" + std::to_string(line) + ": " + what
                                  : path + ": " + what),
      line_(line) {}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("error writing " + path.string());
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    fn(line_no, std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
  }
}

bool parse_id(std::string_view tok, std::uint64_t& out) {
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_real(std::string_view tok, double& out) {
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

Vertex checked_id(std::string_view tok, const std::string& origin, std::size_t line) {
  std::uint64_t id = 0;
  if (!parse_id(tok, id)) {
    throw ParseError(origin, line, "expected a nonnegative vertex id, got '" + std::string(tok) + "'");
  }
  if (id >= std::numeric_limits<Vertex>::max()) {
    throw ParseError(origin, line, "vertex id " + std::string(tok) + " is too large");
  }
  return static_cast<Vertex>(id);
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

constexpr std::string_view kVertexCountTag = "vertices:";

}  // namespace

Graph parse_edge_list(const std::string& text, bool directed, const std::string& origin) {
  std::vector<Edge> edges;
  std::size_t declared = 0;
  std::size_t n = 0;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    std::string_view body = raw;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      const auto comment = split_ws(raw.substr(hash + 1));
      if (comment.size() == 2 && comment[0] == kVertexCountTag) {
        std::uint64_t count = 0;
        if (!parse_id(comment[1], count)) throw ParseError(origin, line, "bad vertex count");
        declared = static_cast<std::size_t>(count);
      }
      body = raw.substr(0, hash);
    }
    const auto tok = split_ws(body);
    if (tok.empty()) return;
    if (tok.size() < 2 || tok.size() > 3) {
      throw ParseError(origin, line, "expected 'u v [w]', got " + std::to_string(tok.size()) + " fields");
    }
    const Vertex u = checked_id(tok[0], origin, line);
    const Vertex v = checked_id(tok[1], origin, line);
    double w = 1.0;
    if (tok.size() == 3 && !parse_real(tok[2], w)) {
      throw ParseError(origin, line, "bad weight '" + std::string(tok[2]) + "'");
    }
    if (u == v) throw ParseError(origin, line, "self-loop at vertex " + std::to_string(u));
    if (!std::isfinite(w)) throw ParseError(origin, line, "weight must be finite");
    if (w < 0.0) throw ParseError(origin, line, "negative weight " + format_real(w));
    if (w == 0.0) throw ParseError(origin, line, "zero weight");
    edges.push_back(Edge{u, v, w});
    n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
  });
  if (declared > 0 && declared < n) {
    throw ParseError(origin, 0, "declared vertex count " + std::to_string(declared) +
                                    " is smaller than the largest id + 1 (" + std::to_string(n) + ")");
  }
  n = std::max(n, declared);
  return directed ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

Graph load_edge_list(const std::filesystem::path& path, bool directed) {
  return parse_edge_list(read_file(path), directed, path.string());
}

std::string format_edge_list(const Graph& g) {
  std::string out = "# " + std::string(kVertexCountTag) + " " + std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += format_real(e.w);
    out += '\n';
  }
  return out;
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  write_file(path, format_edge_list(g));
}

Graph parse_flow_matrix(const std::string& text, const std::string& origin) {
  std::map<std::pair<Vertex, Vertex>, double> flow;
  std::size_t n = 0;
  bool seen_row = false;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    std::string_view body = raw;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) body = raw.substr(0, hash);
    body = trim(body);
    if (body.empty()) return;
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
      const auto comma = body.find(',', pos);
      fields.push_back(trim(body.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    const bool first = !seen_row;
    seen_row = true;
    std::uint64_t probe = 0;
    if (first && !fields.empty() && !parse_id(fields[0], probe)) return;  // header
    if (fields.size() != 3) {
      throw ParseError(origin, line, "expected 'j,l,count', got " + std::to_string(fields.size()) + " fields");
    }
    const Vertex j = checked_id(fields[0], origin, line);
    const Vertex l = checked_id(fields[1], origin, line);
    double count = 0.0;
    if (!parse_real(fields[2], count) || !std::isfinite(count)) {
      throw ParseError(origin, line, "bad count '" + std::string(fields[2]) + "'");
    }
    if (count < 0.0) throw ParseError(origin, line, "negative count " + format_real(count));
    n = std::max<std::size_t>(n, std::max(j, l) + std::size_t{1});
    if (j == l) return;  // flow within one region carries no direction
    flow[{j, l}] += count;
  });

  std::vector<Edge> edges;
  for (const auto& [key, m_jl] : flow) {
    const auto [j, l] = key;
    auto back = flow.find({l, j});
    const double m_lj = back == flow.end() ? 0.0 : back->second;
    // Each unordered pair is handled once, from its larger-flow direction.
    if (m_jl <= m_lj) continue;
    edges.push_back(Edge{j, l, (m_jl - m_lj) / (m_jl + m_lj)});
  }
  return Graph::directed(n, edges);
}

Graph load_flow_matrix(const std::filesystem::path& path) {
  return parse_flow_matrix(read_file(path), path.string());
}

std::vector<std::uint32_t> load_labels(const std::filesystem::path& path, std::size_t n) {
  const std::string text = read_file(path);
  const std::string origin = path.string();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> labels(n, kUnset);
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    std::string_view body = raw;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) body = raw.substr(0, hash);
    const auto tok = split_ws(body);
    if (tok.empty()) return;
    if (tok.size() != 2) throw ParseError(origin, line, "expected 'vertex label'");
    const Vertex v = checked_id(tok[0], origin, line);
    std::uint64_t label = 0;
    if (!parse_id(tok[1], label) || label >= kUnset) throw ParseError(origin, line, "bad label");
    if (v >= n) throw ParseError(origin, line, "vertex " + std::to_string(v) + " out of range");
    if (labels[v] != kUnset) throw ParseError(origin, line, "vertex " + std::to_string(v) + " labeled twice");
    labels[v] = static_cast<std::uint32_t>(label);
  });
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] == kUnset) throw ParseError(origin, 0, "vertex " + std::to_string(v) + " has no label");
  }
  return labels;
}

void write_labels(const std::vector<std::uint32_t>& labels, const std::filesystem::path& path) {
  std::string out;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    out += std::to_string(v) + ' ' + std::to_string(labels[v]) + '\n';
  }
  write_file(path, out);
}

std::vector<std::string> load_names(const std::filesystem::path& path, std::size_t n) {
  const std::string text = read_file(path);
  const std::string origin = path.string();
  std::vector<std::string> names(n);
  for (std::size_t v = 0; v < n; ++v) names[v] = std::to_string(v);
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto body = trim(raw);
    if (body.empty() || body.front() == '#') return;
    const auto space = body.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError(origin, line, "expected 'vertex name'");
    const Vertex v = checked_id(body.substr(0, space), origin, line);
    if (v >= n) throw ParseError(origin, line, "vertex " + std::to_string(v) + " out of range");
    names[v] = std::string(trim(body.substr(space)));
  });
  return names;
}

std::filesystem::path labels_path_for(const std::filesystem::path& graph_path) {
  return std::filesystem::path(graph_path.string() + ".labels");
}

GraphFingerprint fingerprint(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.num_vertices());
  mix(g.is_directed() ? 1 : 0);
  for (const Edge& e : g.edges()) {
    mix(e.u);
    mix(e.v);
    mix(std::bit_cast<std::uint64_t>(e.w));
  }
  return GraphFingerprint{g.num_vertices(), g.num_edges(), h};
}

namespace {

nlohmann::ordered_json ids_json(const VertexSet& s) {
  auto arr = nlohmann::ordered_json::array();
  for (Vertex v : s) arr.push_back(v);
  return arr;
}

VertexSet ids_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw std::invalid_argument(std::string("run result: '") + field + "' must be an array");
  std::vector<Vertex> ids;
  for (const auto& x : j) ids.push_back(x.get<Vertex>());
  return VertexSet(std::move(ids));
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, 16);
  std::string s(buf, ptr);
  return std::string(16 - s.size(), '0') + s;
}

}  // namespace

nlohmann::ordered_json to_json(const Graph& g, const RunResult& result) {
  nlohmann::ordered_json j;
  j["algorithm"] = result.algorithm;
  j["found"] = result.found;
  j["seed_vertex"] = result.seed_vertex;
  j["parameters"] = result.parameters;
  j["rng_seed"] = result.rng_seed;
  j["L"] = ids_json(result.l);
  j["R"] = ids_json(result.r);

  if (result.found) {
    for (Vertex v : result.l) g.check_vertex(v);
    for (Vertex v : result.r) g.check_vertex(v);
    nlohmann::ordered_json m;
    if (g.is_directed()) {
      m["flow"] = flow_ratio(g, result.l, result.r);
      const double both = cut_weight(g, result.l, result.r) + cut_weight(g, result.r, result.l);
      m["cut_imbalance"] = both > 0.0 ? nlohmann::ordered_json(cut_imbalance(g, result.l, result.r))
                                      : nlohmann::ordered_json(nullptr);
      m["volume"] = out_volume(g, result.l) + in_volume(g, result.r);
    } else {
      m["beta"] = bipartiteness(g, result.l, result.r);
      m["volume"] = volume(g, result.l) + volume(g, result.r);
    }
    const CoverSet s = from_cluster_pair(result.l, result.r);
    const double vol = cover_volume(g, s);
    const bool defined = std::min(vol, cover_total_volume(g) - vol) > 0.0;
    m["cover_conductance"] = defined ? nlohmann::ordered_json(conductance_in_cover(g, s))
                                     : nlohmann::ordered_json(nullptr);
    j["metrics"] = m;
  } else {
    j["metrics"] = nullptr;
  }

  const GraphFingerprint fp = fingerprint(g);
  j["graph"] = {{"n", fp.n}, {"m", fp.m}, {"directed", g.is_directed()}, {"hash", hex64(fp.hash)}};
  j["wall_ms"] = result.wall_ms;
  return j;
}

RunResult run_result_from_json(const nlohmann::json& j) {
  RunResult r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.found = j.at("found").get<bool>();
  r.seed_vertex = j.at("seed_vertex").get<Vertex>();
  r.parameters = nlohmann::ordered_json::parse(j.at("parameters").dump());
  r.rng_seed = j.value("rng_seed", std::uint64_t{0});
  r.l = ids_from_json(j.at("L"), "L");
  r.r = ids_from_json(j.at("R"), "R");
  r.wall_ms = j.value("wall_ms", 0.0);
  return r;
}

}  // namespace ldc
