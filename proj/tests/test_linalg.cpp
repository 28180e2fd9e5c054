#include <gtest/gtest.h>

#include <random>

#include "wha/linalg.hpp"

using namespace wha;
using Q = Rational;

namespace {

Matrix<Q> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density_pct = 50) {
  std::uniform_int_distribution<int> val(-3, 3), pct(0, 99);
  Matrix<Q> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) < density_pct) m(i, j) = Q(val(rng));
  return m;
}

// Rank by textbook dense Gaussian elimination, independent of RowReducer.
std::size_t dense_rank(Matrix<Q> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Q f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(Kernel, ZeroMapIsEverything) {
  auto k = kernel_basis(Matrix<Q>(2, 2));
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_EQ(k.basis(), Matrix<Q>::identity(2));
}

TEST(Kernel, InjectiveMapHasNone) {
  EXPECT_EQ(kernel_basis(Matrix<Q>::identity(3)).dim(), 0u);
}

TEST(Kernel, RankOneTwoByTwo) {
  Matrix<Q> a{{1, 1}, {2, 2}};
  auto k = kernel_basis(a);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.basis_vector(0), (Vector<Q>{1, -1}));
}

TEST(Solve, Identity) {
  Vector<Q> b{Q(3), Q(-1, 2), Q(0)};
  EXPECT_EQ(*solve(Matrix<Q>::identity(3), b), b);
}

TEST(Solve, Underdetermined) {
  auto x = solve(Matrix<Q>{{1, 1}}, Vector<Q>{Q(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] + (*x)[1], Q(2));
  EXPECT_EQ(*x, (Vector<Q>{2, 0}));
}

TEST(Solve, Inconsistent) {
  EXPECT_FALSE(solve(Matrix<Q>{{1}, {1}}, Vector<Q>{Q(1), Q(2)}));
  EXPECT_THROW(solve(Matrix<Q>{{1}, {1}}, Vector<Q>{Q(1)}), std::invalid_argument);
}

TEST(Kron, IdentityAndZero) {
  EXPECT_EQ(kron(Matrix<Q>::identity(2), Matrix<Q>::identity(3)), Matrix<Q>::identity(6));
  EXPECT_TRUE(kron(Matrix<Q>{{1, 2}, {3, 4}}, Matrix<Q>(2, 2)).is_zero());
}

TEST(Kron, SwapBlocks) {
  Matrix<Q> swap{{0, 1}, {1, 0}};
  Vector<Q> v{1, 2, 3, 4};
  // (e_i ⊗ e_k) sits at 2i + k; swapping i exchanges the halves.
  EXPECT_EQ(kron(swap, Matrix<Q>::identity(2)) * v, (Vector<Q>{3, 4, 1, 2}));
  EXPECT_EQ(kron(Matrix<Q>::identity(2), swap) * v, (Vector<Q>{2, 1, 4, 3}));
}

TEST(Inverse, Cases) {
  auto id = is_invertible_matrix(Matrix<Q>::identity(3));
  EXPECT_TRUE(id.invertible);
  EXPECT_EQ(id.inverse, Matrix<Q>::identity(3));
  EXPECT_FALSE(is_invertible_matrix(Matrix<Q>{{0, 1}, {0, 0}}).invertible);
  auto u = is_invertible_matrix(Matrix<Q>{{1, 1}, {0, 1}});
  EXPECT_TRUE(u.invertible);
  EXPECT_EQ(u.inverse, (Matrix<Q>{{1, -1}, {0, 1}}));
  EXPECT_THROW(is_invertible_matrix(Matrix<Q>(2, 3)), std::invalid_argument);
}

TEST(Property, RankNullity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    auto a = random_matrix(rng, r, c, 20 + trial);
    auto k = kernel_basis(a);
    EXPECT_EQ(rank(a) + k.dim(), c);
    EXPECT_EQ(rank(a), dense_rank(a));
    EXPECT_TRUE((a * k.basis()).is_zero());
    EXPECT_EQ(rank(k.basis()), k.dim());
  }
}

TEST(Property, CanonicalSubspace) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 6, k = 1 + rng() % n;
    auto gens = random_matrix(rng, n, k, 70);
    // Mix the spanning set by an invertible upper-triangular matrix.
    Matrix<Q> mix = Matrix<Q>::identity(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) mix(i, j) = Q(static_cast<long>(rng() % 5) - 2);
    EXPECT_EQ(image(gens), image(gens * mix));
    EXPECT_EQ(image(gens), image(hstack<Q>({gens, gens * mix}, n)));
  }
}

TEST(Property, KronAssociative) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    auto b = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    auto c = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
    // Mixed product rule.
    auto x = random_matrix(rng, a.cols(), 2), y = random_matrix(rng, b.cols(), 2);
    EXPECT_EQ(kron(a, b) * kron(x, y), kron(Matrix<Q>(a * x), Matrix<Q>(b * y)));
  }
}

TEST(Property, SolveAndInverseAgree) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 6;
    auto a = random_matrix(rng, n, n, 60);
    auto inv = is_invertible_matrix(a);
    EXPECT_EQ(inv.invertible, !determinant(a).is_zero());
    if (inv.invertible) {
      EXPECT_EQ(a * inv.inverse, Matrix<Q>::identity(n));
      Vector<Q> b(n);
      for (auto& x : b) x = Q(static_cast<long>(rng() % 7) - 3);
      EXPECT_EQ(*solve(a, b), inv.inverse * b);
    }
  }
}

TEST(Quotient, ProjectionKillsRelations) {
  Matrix<Q> rel{{1}, {1}, {0}};
  Quotient<Q> q(image(rel));
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_TRUE((q.projection() * rel).is_zero());
  EXPECT_EQ(q.projection() * q.section(), Matrix<Q>::identity(2));
}

TEST(ModularElimination, MatchesRationalRank) {
  std::mt19937 rng(23);
  Field<ModP> f(1000003);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng() % 6;
    auto a = random_matrix(rng, n, n + 1, 50);
    Matrix<ModP> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = f.from_int(a(i, j).raw().get_num().get_si());
    EXPECT_EQ(rank(m), rank(a));
  }
}
