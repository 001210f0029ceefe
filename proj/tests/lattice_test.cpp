#include <gtest/gtest.h>

#include "kernelcut/lattice.hpp"
#include "kernelcut/random.hpp"

using namespace kernelcut;

namespace {

Rational determinant(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// Gram-Schmidt vectors and coefficients, recomputed independently.
void gram_schmidt(const std::vector<RationalVector>& b, std::vector<RationalVector>& star,
                  std::vector<RationalVector>& mu) {
  const std::size_t n = b.size();
  star = b;
  mu.assign(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      mu[i][j] = dot(b[i], star[j]) / dot(star[j], star[j]);
      for (std::size_t t = 0; t < b[i].size(); ++t) star[i][t] -= mu[i][j] * star[j][t];
    }
}

void expect_reduced(const std::vector<RationalVector>& input, const ReducedBasis& out, const Rational& delta) {
  const std::size_t n = input.size();
  ASSERT_EQ(out.rows.size(), n);
  // rows = transform * input
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < input[0].size(); ++c) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += out.transform[i][j] * input[j][c];
      EXPECT_EQ(s, out.rows[i][c]);
    }
  std::vector<RationalVector> t(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = out.transform[i][j];
  Rational det = determinant(t);
  EXPECT_TRUE(det == 1 || det == -1) << det.get_str();

  std::vector<RationalVector> star, mu;
  gram_schmidt(out.rows, star, mu);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_LE(abs(mu[i][j]), Rational(1, 2));
  for (std::size_t k = 1; k < n; ++k) {
    Rational lhs = dot(star[k], star[k]);
    Rational rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * dot(star[k - 1], star[k - 1]);
    EXPECT_GE(lhs, rhs);
  }
}

}  // namespace

TEST(Lll, IdentityIsAlreadyReduced) {
  std::vector<RationalVector> id{{1, 0}, {0, 1}};
  auto out = lll_reduce(id);
  EXPECT_EQ(out.rows, id);
  EXPECT_EQ(out.swaps, 0u);
}

TEST(Lll, TwoByTwoExample) {
  std::vector<RationalVector> b{{1, 1}, {1, 0}};
  auto out = lll_reduce(b, Rational(3, 4));
  expect_reduced(b, out, Rational(3, 4));
}

TEST(Lll, RankOne) {
  std::vector<RationalVector> b{{5}};
  auto out = lll_reduce(b);
  ASSERT_EQ(out.rows.size(), 1u);
  EXPECT_EQ(abs(out.rows[0][0]), 5);
}

TEST(Lll, DependentRowsRejected) {
  std::vector<RationalVector> b{{1, 2}, {2, 4}};
  EXPECT_THROW(lll_reduce(b), DegenerateBasis);
  EXPECT_THROW(lll_reduce({{0, 0}}), DegenerateBasis);
}

TEST(Lll, DeltaOutOfRange) {
  EXPECT_THROW(lll_reduce({{1}}, Rational(1, 4)), ValidationError);
  EXPECT_THROW(lll_reduce({{1}}, Rational(1)), ValidationError);
}

TEST(Lll, RandomRationalBases) {
  Random rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    std::vector<RationalVector> b(n, RationalVector(n));
    for (auto& row : b)
      for (auto& x : row) x = rng.rational(50, 9);
    std::vector<RationalVector> sq(b);
    if (determinant(sq) == 0) continue;
    for (Rational delta : {Rational(3, 4), Rational(99, 100)}) {
      auto out = lll_reduce(b, delta);
      expect_reduced(b, out, delta);
      EXPECT_EQ(out.rows, lll_reduce(b, delta).rows);
    }
  }
}
