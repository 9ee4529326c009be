#include "ldc/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include <absl/container/flat_hash_map.h>

namespace ldc {

Labeling pair_labeling(std::size_t n, const VertexSet& l, const VertexSet& r) {
  if (!l.disjoint(r)) throw std::invalid_argument("pair_labeling: L and R overlap");
  Labeling labels(n, kOutsideLabel);
  for (Vertex v : l) labels.at(v) = 1;
  for (Vertex v : r) labels.at(v) = 2;
  return labels;
}

namespace {

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double adjusted_rand_index(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) throw std::invalid_argument("adjusted_rand_index: length mismatch");
  absl::flat_hash_map<std::uint64_t, double> joint;
  absl::flat_hash_map<std::uint32_t, double> rows;
  absl::flat_hash_map<std::uint32_t, double> cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[(static_cast<std::uint64_t>(a[i]) << 32) | b[i]] += 1.0;
    rows[a[i]] += 1.0;
    cols[b[i]] += 1.0;
  }
  double index = 0.0;
  for (const auto& [key, c] : joint) index += choose2(c);
  double sum_rows = 0.0;
  for (const auto& [key, c] : rows) sum_rows += choose2(c);
  double sum_cols = 0.0;
  for (const auto& [key, c] : cols) sum_cols += choose2(c);
  const double pairs = choose2(static_cast<double>(a.size()));
  if (pairs <= 0.0) return 1.0;
  const double expected = sum_rows * sum_cols / pairs;
  const double max_index = 0.5 * (sum_rows + sum_cols);
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

namespace {

std::size_t symmetric_difference_size(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

double oriented_ratio(const VertexSet& l, const VertexSet& r, const VertexSet& c1,
                      const VertexSet& c2) {
  const double num = static_cast<double>(symmetric_difference_size(l, c1) +
                                         symmetric_difference_size(r, c2));
  const double den = static_cast<double>(l.united(c1).size() + r.united(c2).size());
  return num / den;
}

}  // namespace

double misclassified_ratio(const VertexSet& l, const VertexSet& r, const VertexSet& c1,
                           const VertexSet& c2) {
  if (!l.disjoint(r)) throw std::invalid_argument("misclassified_ratio: L and R overlap");
  if (!c1.disjoint(c2)) throw std::invalid_argument("misclassified_ratio: C1 and C2 overlap");
  if (l.empty() && r.empty() && c1.empty() && c2.empty()) {
    throw std::invalid_argument("misclassified_ratio: all sets empty");
  }
  return std::min(oriented_ratio(l, r, c1, c2), oriented_ratio(r, l, c1, c2));
}

}  // namespace ldc
