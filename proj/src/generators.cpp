#include "ldc/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace ldc {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string("generator: probability ") + name +
                                " must lie in [0, 1], got " + std::to_string(p));
  }
}

/// Calls f(i) for each index in [0, count) independently with probability p,
/// skipping geometrically between hits so the cost is O(hits) expected.
template <class Rng, class F>
void sample_indices(std::uint64_t count, double p, Rng& rng, F&& f) {
  if (p <= 0.0 || count == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::geometric_distribution<std::uint64_t> skip(p);
  std::uint64_t i = skip(rng);
  while (i < count) {
    f(i);
    const std::uint64_t gap = skip(rng);
    if (gap >= count - i) break;
    i += gap + 1;
  }
}

class Builder {
 public:
  explicit Builder(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  /// Unordered pairs inside [begin, begin + size).
  template <class F>
  void within(Vertex begin, std::size_t size, double p, F&& f) {
    for (std::size_t i = 0; i + 1 < size; ++i) {
      sample_indices(size - i - 1, p, rng_, [&](std::uint64_t j) {
        f(static_cast<Vertex>(begin + i), static_cast<Vertex>(begin + i + 1 + j));
      });
    }
  }

  /// Pairs (a, b) with a in block A and b in block B.
  template <class F>
  void between(Vertex a_begin, std::size_t a_size, Vertex b_begin, std::size_t b_size, double p,
               F&& f) {
    sample_indices(static_cast<std::uint64_t>(a_size) * b_size, p, rng_, [&](std::uint64_t idx) {
      f(static_cast<Vertex>(a_begin + idx / b_size), static_cast<Vertex>(b_begin + idx % b_size));
    });
  }

  /// Emits u -> v with probability forward, otherwise v -> u.
  void orient(Vertex u, Vertex v, double forward) {
    if (coin_(rng_) < forward) {
      edges.push_back(Edge{u, v, 1.0});
    } else {
      edges.push_back(Edge{v, u, 1.0});
    }
  }

  std::vector<Edge> edges;

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> coin_{0.0, 1.0};
};

void add_cbm_core(const CbmSpec& spec, Builder& b) {
  for (std::size_t i = 0; i < spec.k; ++i) {
    const auto begin = static_cast<Vertex>(i * spec.n);
    b.within(begin, spec.n, spec.p, [&](Vertex u, Vertex v) { b.orient(u, v, 0.5); });
  }
  for (std::size_t i = 0; i < spec.k; ++i) {
    // With k = 2 both directions of the cycle share one block pair.
    if (spec.k == 2 && i == 1) break;
    const std::size_t j = (i + 1) % spec.k;
    b.between(static_cast<Vertex>(i * spec.n), spec.n, static_cast<Vertex>(j * spec.n), spec.n,
              spec.q, [&](Vertex u, Vertex v) { b.orient(u, v, spec.eta); });
  }
}

}  // namespace

void SbmSpec::validate() const {
  if (n1 < 1) throw std::invalid_argument("sbm: n1 must be at least 1");
  check_probability(p1, "p1");
  check_probability(q1, "q1");
  check_probability(p2(), "p2 = 2 p1");
  check_probability(q2(), "q2 = 0.1 p1");
}

void CbmSpec::validate() const {
  if (k < 2) throw std::invalid_argument("cbm: k must be at least 2");
  if (n < 1) throw std::invalid_argument("cbm: n must be at least 1");
  check_probability(p, "p");
  check_probability(q, "q");
  check_probability(eta, "eta");
}

void CbmPlusSpec::validate() const {
  base.validate();
  if (n_local < 1) throw std::invalid_argument("cbm+: n' must be at least 1");
  check_probability(q1_local, "q1'");
  check_probability(q2_local, "q2'");
  check_probability(eta_local, "eta'");
}

GeneratedGraph gen_sbm(const SbmSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t n1 = spec.n1;
  const std::size_t n3 = spec.n3();
  const std::size_t n = 2 * n1 + n3;
  const auto c1 = Vertex{0};
  const auto c2 = static_cast<Vertex>(n1);
  const auto c3 = static_cast<Vertex>(2 * n1);

  Builder b(seed);
  auto add = [&](Vertex u, Vertex v) { b.edges.push_back(Edge{u, v, 1.0}); };
  b.within(c1, n1, spec.p1, add);
  b.within(c2, n1, spec.p1, add);
  b.within(c3, n3, spec.p2(), add);
  b.between(c1, n1, c2, n1, spec.q1, add);
  b.between(c1, n1, c3, n3, spec.q2(), add);
  b.between(c2, n1, c3, n3, spec.q2(), add);

  GeneratedGraph out{Graph::undirected(n, b.edges), std::vector<std::uint32_t>(n, 2)};
  for (std::size_t v = 0; v < n1; ++v) out.labels[v] = 0;
  for (std::size_t v = n1; v < 2 * n1; ++v) out.labels[v] = 1;
  return out;
}

GeneratedGraph gen_cbm(const CbmSpec& spec, std::uint64_t seed) {
  spec.validate();
  Builder b(seed);
  add_cbm_core(spec, b);
  const std::size_t n = spec.k * spec.n;
  GeneratedGraph out{Graph::directed(n, b.edges), std::vector<std::uint32_t>(n)};
  for (std::size_t v = 0; v < n; ++v) out.labels[v] = static_cast<std::uint32_t>(v / spec.n);
  return out;
}

GeneratedGraph gen_cbm_plus(const CbmPlusSpec& spec, std::uint64_t seed) {
  spec.validate();
  const CbmSpec& cbm = spec.base;
  Builder b(seed);
  add_cbm_core(cbm, b);

  const std::size_t core = cbm.k * cbm.n;
  const auto first = static_cast<Vertex>(core);
  const auto second = static_cast<Vertex>(core + spec.n_local);
  b.within(first, spec.n_local, cbm.p, [&](Vertex u, Vertex v) { b.orient(u, v, 0.5); });
  b.within(second, spec.n_local, cbm.p, [&](Vertex u, Vertex v) { b.orient(u, v, 0.5); });
  b.between(first, spec.n_local, second, spec.n_local, spec.q1_local,
            [&](Vertex u, Vertex v) { b.orient(u, v, 0.5); });
  // C1 feeds C_{k+1}; C_{k+2} feeds C1.
  b.between(first, spec.n_local, Vertex{0}, cbm.n, spec.q2_local,
            [&](Vertex u, Vertex v) { b.orient(v, u, spec.eta_local); });
  b.between(second, spec.n_local, Vertex{0}, cbm.n, spec.q2_local,
            [&](Vertex u, Vertex v) { b.orient(u, v, spec.eta_local); });

  const std::size_t n = core + 2 * spec.n_local;
  GeneratedGraph out{Graph::directed(n, b.edges), std::vector<std::uint32_t>(n)};
  for (std::size_t v = 0; v < core; ++v) out.labels[v] = static_cast<std::uint32_t>(v / cbm.n);
  for (std::size_t v = core; v < n; ++v) {
    out.labels[v] = static_cast<std::uint32_t>(cbm.k + (v - core) / spec.n_local);
  }
  return out;
}

VertexSet cluster_members(const std::vector<std::uint32_t>& labels, std::uint32_t label) {
  std::vector<Vertex> ids;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == label) ids.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(ids));
}

}  // namespace ldc
