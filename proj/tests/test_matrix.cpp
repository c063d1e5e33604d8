#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qmh/matrix.hpp"

namespace qmh {
namespace {

const LaurentPoly q = LaurentPoly::q_power(1);

/// Rank of a rational matrix by plain Gaussian elimination (independent of the library).
std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

LaurentPoly random_entry(std::mt19937_64& rng, int spread = 2) {
  std::uniform_int_distribution<int> e(-spread, spread), c(-3, 3);
  return LaurentPoly::from_terms({{e(rng), Rational(c(rng))}, {e(rng), Rational(c(rng))}});
}

ScalarMatrix product(const std::vector<std::vector<LaurentPoly>>& a, const std::vector<std::vector<LaurentPoly>>& b) {
  return ScalarMatrix::from_dense(a) * ScalarMatrix::from_dense(b);
}

/// L * D * U with unitriangular L, U and k nonzero unit pivots in D: rank exactly k.
ScalarMatrix matrix_of_rank(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::vector<LaurentPoly>> L(n, std::vector<LaurentPoly>(n)), D = L, U = L;
  for (std::size_t i = 0; i < n; ++i) {
    L[i][i] = U[i][i] = LaurentPoly(1);
    for (std::size_t j = 0; j < i; ++j) L[i][j] = random_entry(rng);
    for (std::size_t j = i + 1; j < n; ++j) U[i][j] = random_entry(rng);
    if (i < k) D[i][i] = LaurentPoly::q_power(static_cast<int>(rng() % 5) - 2);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto LP = L;
  for (std::size_t i = 0; i < n; ++i) LP[i] = L[perm[i]];
  return ScalarMatrix::from_dense(LP) * product(D, U);
}

TEST(MatrixRank, Examples) {
  const auto m1 = ScalarMatrix::from_dense({{LaurentPoly(1), q}, {q, q * q}});
  EXPECT_EQ(matrix_rank_exact(m1).rank, 1u);
  EXPECT_EQ(matrix_rank(m1, RankMode::modular).rank, 1u);
  EXPECT_EQ(matrix_rank_exact(ScalarMatrix::identity(3)).rank, 3u);
  const auto m3 = ScalarMatrix::from_dense({{q_inv_minus_q()}});
  EXPECT_EQ(matrix_rank_exact(m3).rank, 1u);
  EXPECT_EQ(matrix_rank_exact(ScalarMatrix(4, 5)).rank, 0u);
}

TEST(MatrixRank, GenericRankNotSpecialRank) {
  // Singular at q = 1 and q = -1 but generically invertible.
  const auto m = ScalarMatrix::from_dense({{LaurentPoly(1), q}, {q, LaurentPoly(1)}});
  EXPECT_EQ(matrix_rank_exact(m).rank, 2u);
  EXPECT_EQ(matrix_rank(m, RankMode::modular, 99).rank, 2u);
  EXPECT_EQ(matrix_rank_at(m, PrimeField(kPrime32), 1), 1u);
}

TEST(MatrixRank, ExactMatchesModularOnRandomIntegerMatrices) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(c));
    std::vector<std::vector<LaurentPoly>> lp(r, std::vector<LaurentPoly>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const long v = static_cast<long>(rng() % 7) - 3;
        a[i][j] = v * (rng() % 3 == 0 ? 0 : 1);
        lp[i][j] = LaurentPoly(a[i][j]);
      }
    // Force some dependent rows.
    if (r > 2) {
      for (std::size_t j = 0; j < c; ++j) {
        a[r - 1][j] = a[0][j] + 2 * a[1][j];
        lp[r - 1][j] = LaurentPoly(a[r - 1][j]);
      }
    }
    const auto m = ScalarMatrix::from_dense(lp);
    const std::size_t expect = rational_rank(a);
    EXPECT_EQ(matrix_rank_exact(m).rank, expect);
    const RankResult mod = matrix_rank(m, RankMode::modular, static_cast<std::uint64_t>(t));
    EXPECT_EQ(mod.rank, expect);
    EXPECT_GE(mod.witnesses.size(), 2u);
  }
}

TEST(MatrixRank, ExactMatchesModularOnLaurentMatricesOfKnownRank) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 5, k = rng() % (n + 1);
    const ScalarMatrix m = matrix_of_rank(rng, n, k);
    EXPECT_EQ(matrix_rank_exact(m).rank, k);
    EXPECT_EQ(matrix_rank(m, RankMode::modular, static_cast<std::uint64_t>(t)).rank, k);
  }
}

TEST(MatrixRank, BlockDiagonalComponents) {
  std::mt19937_64 rng(5);
  const ScalarMatrix a = matrix_of_rank(rng, 4, 2), b = matrix_of_rank(rng, 3, 3);
  ScalarMatrix m(7, 7);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(4 + i, 4 + j, b.at(i, j));
  EXPECT_EQ(detail::components(m).size() >= 2, true);
  EXPECT_EQ(matrix_rank_exact(m).rank, 5u);
}

TEST(KernelBasis, Examples) {
  const auto k1 = kernel_basis(ScalarMatrix::from_dense({{LaurentPoly(1), q}}));
  ASSERT_EQ(k1.size(), 1u);
  // Proportional to (-q, 1).
  EXPECT_EQ(k1[0][0] * LaurentPoly(1), -(k1[0][1] * q));
  EXPECT_EQ(kernel_basis(ScalarMatrix(2, 2)).size(), 2u);
  EXPECT_TRUE(kernel_basis(ScalarMatrix::identity(3)).empty());
}

TEST(KernelBasis, RankPlusNullityAndVectorsAreInKernel) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 4, k = rng() % (n + 1);
    const ScalarMatrix m = matrix_of_rank(rng, n, k);
    const auto basis = kernel_basis(m);
    EXPECT_EQ(matrix_rank_exact(m).rank + basis.size(), m.cols());
    if (basis.empty()) continue;
    std::vector<std::vector<LaurentPoly>> cols(m.cols(), std::vector<LaurentPoly>(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t i = 0; i < m.cols(); ++i) cols[i][b] = basis[b][i];
    const ScalarMatrix K = ScalarMatrix::from_dense(cols);
    EXPECT_EQ((m * K).nonzeros(), 0u);
    EXPECT_EQ(matrix_rank_exact(K).rank, basis.size());
  }
}

TEST(ScalarMatrix, StoresNoZeros) {
  ScalarMatrix m(2, 2);
  m.add(0, 0, q);
  m.add(0, 0, -q);
  EXPECT_EQ(m.nonzeros(), 0u);
  m.set(1, 1, LaurentPoly(2));
  EXPECT_EQ(m.nonzeros(), 1u);
  EXPECT_THROW(m.set(2, 0, q), std::out_of_range);
}

}  // namespace
}  // namespace qmh
