#include <gtest/gtest.h>

#include <random>

#include "ldc/metrics.hpp"

namespace ldc {
namespace {

// Pair-counting reference: ARI = 2 (ad - bc) / ((a + b)(b + d) + (a + c)(c + d))
// over all unordered point pairs.
double ari_by_pairs(const Labeling& x, const Labeling& y) {
  double a = 0, b = 0, c = 0, d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const bool sx = x[i] == x[j];
      const bool sy = y[i] == y[j];
      if (sx && sy) ++a;
      if (sx && !sy) ++b;
      if (!sx && sy) ++c;
      if (!sx && !sy) ++d;
    }
  }
  const double den = (a + b) * (b + d) + (a + c) * (c + d);
  return den == 0.0 ? 1.0 : 2.0 * (a * d - b * c) / den;
}

Labeling random_labeling(std::size_t n, std::uint32_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);
  Labeling out(n);
  for (auto& l : out) l = pick(rng);
  return out;
}

TEST(Ari, Examples) {
  const Labeling a{0, 0, 0, 1, 1, 1};
  EXPECT_EQ(adjusted_rand_index(a, a), 1.0);
  const Labeling same(6, 0);
  const Labeling distinct{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(adjusted_rand_index(same, distinct), 0.0);
  const Labeling b{0, 0, 1, 1, 1, 1};
  EXPECT_NEAR(adjusted_rand_index(a, b), 12.0 / 37.0, 1e-15);
  EXPECT_NEAR(ari_by_pairs(a, b), 12.0 / 37.0, 1e-15);
  EXPECT_THROW(adjusted_rand_index(a, Labeling{0}), std::invalid_argument);
}

TEST(Ari, MatchesPairCounting) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 40;
    const Labeling x = random_labeling(n, 1 + trial % 4, rng);
    const Labeling y = random_labeling(n, 1 + trial % 5, rng);
    EXPECT_NEAR(adjusted_rand_index(x, y), ari_by_pairs(x, y), 1e-12);
  }
}

TEST(Ari, SymmetryAndPermutationInvariance) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Labeling x = random_labeling(30, 4, rng);
    const Labeling y = random_labeling(30, 3, rng);
    EXPECT_NEAR(adjusted_rand_index(x, y), adjusted_rand_index(y, x), 1e-12);
    Labeling renamed(x);
    for (auto& l : renamed) l = (l + 7) * 3;
    EXPECT_NEAR(adjusted_rand_index(renamed, y), adjusted_rand_index(x, y), 1e-12);
  }
}

TEST(PairLabeling, ThreeWay) {
  EXPECT_EQ(pair_labeling(5, VertexSet{1}, VertexSet{3, 4}), (Labeling{0, 1, 0, 2, 2}));
  EXPECT_THROW(pair_labeling(5, VertexSet{1}, VertexSet{1}), std::invalid_argument);
}

TEST(Misclassified, Examples) {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (Vertex v = 0; v < 10; ++v) {
    a.push_back(v);
    b.push_back(v + 10);
  }
  const VertexSet c1(a);
  const VertexSet c2(b);
  EXPECT_EQ(misclassified_ratio(c1, c2, c1, c2), 0.0);
  EXPECT_EQ(misclassified_ratio(c2, c1, c1, c2), 0.0);
  const VertexSet c1_minus(std::vector<Vertex>(a.begin() + 1, a.end()));
  EXPECT_DOUBLE_EQ(misclassified_ratio(c1_minus, c2, c1, c2), 1.0 / 20.0);
  EXPECT_EQ(misclassified_ratio({}, {}, c1, c2), 1.0);
  EXPECT_THROW(misclassified_ratio({}, {}, {}, {}), std::invalid_argument);
  EXPECT_THROW(misclassified_ratio(VertexSet{1}, VertexSet{1}, c1, c2), std::invalid_argument);
}

TEST(Misclassified, OrientationSymmetric) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> roll(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vertex> l, r, c1, c2;
    for (Vertex v = 0; v < 30; ++v) {
      const int x = roll(rng);
      if (x == 1) l.push_back(v);
      if (x == 2) r.push_back(v);
      const int y = roll(rng);
      if (y == 1) c1.push_back(v);
      if (y == 2) c2.push_back(v);
    }
    const VertexSet L(l), R(r), C1(c1), C2(c2);
    if (L.empty() && R.empty() && C1.empty() && C2.empty()) continue;
    const double m = misclassified_ratio(L, R, C1, C2);
    EXPECT_EQ(m, misclassified_ratio(R, L, C1, C2));
    EXPECT_GE(m, 0.0);
    EXPECT_LE(m, 1.0);
  }
}

}  // namespace
}  // namespace ldc
