#pragma once

#include <cstdint>
#include <vector>

#include "ldc/graph.hpp"

namespace ldc {

/// Per-vertex cluster label.
using Labeling = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kOutsideLabel = 0;

/// Three-way labeling over n vertices: L -> 1, R -> 2, everything else 0.
Labeling pair_labeling(std::size_t n, const VertexSet& l, const VertexSet& r);

/// Adjusted Rand Index from the contingency table. Returns 1 when both
/// labelings are trivial in the same way (the index is 0/0 there).
double adjusted_rand_index(const Labeling& a, const Labeling& b);

/// min over the two orientations of
///   (|L ^ C1| + |R ^ C2|) / (|L u C1| + |R u C2|).
double misclassified_ratio(const VertexSet& l, const VertexSet& r, const VertexSet& c1,
                           const VertexSet& c2);

}  // namespace ldc
