#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wha/integrals.hpp"

using namespace wha;
using oracle::H;
using oracle::Q;
using oracle::Vec;

namespace {

const Field<Rational> kQ;

H get(const std::string& name) { return *builtin(kQ, name); }

Vec vec(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(Q(x));
  return v;
}

std::vector<Vec> basis_of(const Subspace<Q>& s) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < s.dim(); ++j) out.push_back(s.basis_vector(j));
  return out;
}

}  // namespace

// Expected spaces are frozen only after the brute-force kernel agrees with them.
TEST(Integrals, OracleAgreesWithFrozenValues) {
  EXPECT_TRUE(oracle::same_span(oracle::integrals(get("kc2"), true), {vec({1, 1})}, 2));
  EXPECT_TRUE(oracle::same_span(oracle::integrals(get("kc2"), false), {vec({1, 1})}, 2));
  // Sweedler basis 1, g, x, gx.
  EXPECT_TRUE(oracle::same_span(oracle::integrals(get("sweedler"), true), {vec({0, 0, 1, 1})}, 4));
  EXPECT_TRUE(oracle::same_span(oracle::integrals(get("sweedler"), false), {vec({0, 0, 1, -1})}, 4));
  // Pair groupoid basis g11, g12, g21, g22.
  EXPECT_TRUE(oracle::same_span(oracle::integrals(get("pairgpd2"), true), {vec({1, 0, 1, 0}), vec({0, 1, 0, 1})}, 4));
  EXPECT_EQ(oracle::integrals(get("pairgpd3"), true).size(), 3u);
  EXPECT_TRUE(oracle::same_span(oracle::integrals(get("k"), false), {vec({1})}, 1));
}

TEST(Integrals, EngineMatchesOracleOnCatalog) {
  for (const auto& name : builtin_catalog_names()) {
    H h = get(name);
    auto cd = counital(h);
    auto li = left_integrals(h, cd);
    auto ri = right_integrals(h, cd);
    EXPECT_TRUE(oracle::same_span(basis_of(li.space), oracle::integrals(h, true), h.dim())) << name;
    EXPECT_TRUE(oracle::same_span(basis_of(ri.space), oracle::integrals(h, false), h.dim())) << name;
    EXPECT_EQ(li.space.dim(), ri.space.dim()) << name;
  }
}

TEST(Integrals, KernelAndHomPresentationsCoincide) {
  for (const auto& name : builtin_catalog_names()) {
    H h = get(name);
    auto cd = counital(h);
    for (Side s : {Side::left, Side::right})
      EXPECT_EQ(detail::integral_kernel(h, cd, s), detail::integral_by_hom(h, cd, s)) << name;
  }
}

TEST(Integrals, HopfAlgebrasHaveOneDimensionalIntegrals) {
  for (const auto& name : {"k", "kc2", "fun-c2", "sweedler"}) {
    H h = get(name);
    EXPECT_EQ(left_integrals(h, counital(h)).space.dim(), 1u) << name;
  }
}

TEST(Integrals, LeftIntegralsFormRightIdeal) {
  for (const auto& name : builtin_catalog_names()) {
    H h = get(name);
    auto li = left_integrals(h, counital(h));
    for (std::size_t j = 0; j < li.space.dim(); ++j)
      for (std::size_t i = 0; i < h.dim(); ++i)
        EXPECT_TRUE(li.space.contains(oracle::prod(h, li.space.basis_vector(j), oracle::basis(h.dim(), i)))) << name;
  }
}

// kC2 and the pair groupoids are semisimple, and the only module of the
// right dimension is the unit; Sweedler's ∫^ℓ has g acting by −1 on the right.
TEST(Unimodular, CatalogValues) {
  auto uni = [](const std::string& name) {
    H h = get(name);
    auto cd = counital(h);
    return is_unimodular(h, cd, left_integrals(h, cd), right_integrals(h, cd));
  };
  EXPECT_TRUE(uni("k"));
  EXPECT_TRUE(uni("kc2"));
  EXPECT_FALSE(uni("sweedler"));
  EXPECT_TRUE(uni("pairgpd2"));
  EXPECT_TRUE(uni("pairgpd3"));
  EXPECT_FALSE(uni("sum:sweedler,fun-c2"));
}

TEST(Unimodular, SweedlerIntegralCharacter) {
  H h = get("sweedler");
  Vec lam = vec({0, 0, 1, 1});
  EXPECT_EQ(oracle::prod(h, lam, oracle::basis(4, 1)), vec({0, 0, -1, -1}));
  EXPECT_EQ(oracle::counit_of(h, oracle::basis(4, 1)), Q(1));
}

TEST(Invertibility, PropertiesHoldOnCatalog) {
  for (const auto& name : builtin_catalog_names()) {
    H h = get(name);
    auto cd = counital(h);
    auto r = check_integral_invertibility(h, cd, left_integrals(h, cd), right_integrals(h, cd));
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_EQ(r.sections.size(), 6u);
  }
}

// Random elements of ∫^ℓ satisfy gΛ = ε_t(g)Λ for random g.
TEST(IntegralProperty, RandomCombinations) {
  std::mt19937 rng(1717);
  std::uniform_int_distribution<int> val(-5, 5);
  for (const auto& name : builtin_catalog_names()) {
    H h = get(name);
    const std::size_t n = h.dim();
    auto li = left_integrals(h, counital(h));
    for (int trial = 0; trial < 5; ++trial) {
      Vec lam(n), g(n);
      for (std::size_t j = 0; j < li.space.dim(); ++j) lam = axpy(lam, Q(val(rng)), li.space.basis_vector(j));
      for (auto& c : g) c = Q(val(rng));
      EXPECT_EQ(oracle::prod(h, g, lam), oracle::prod(h, oracle::eps_t(h, g), lam)) << name;
    }
  }
}
