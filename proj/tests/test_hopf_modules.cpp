#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wha/hopf_modules.hpp"
#include "wha/nakayama.hpp"
#include "wha/simples.hpp"

using namespace wha;
using oracle::H;
using oracle::Q;
using oracle::Vec;
using Mod = ModuleRep<Q>;

namespace {

const Field<Rational> kQ;

H get(const std::string& name) { return *builtin(kQ, name); }

Mod trivial(const H& h) {
  Mod m{Side::left, 1, {}};
  for (const auto& e : h.counit()) {
    Matrix<Q> a(1, 1);
    a(0, 0) = e;
    m.action.push_back(a);
  }
  return m;
}

std::vector<Mod> generators(const H& h) {
  auto cd = counital(h);
  std::vector<Mod> g{unit_object(h, cd, Side::left), regular_module(h.algebra(), Side::left)};
  for (auto& s : simple_modules(h)) g.push_back(std::move(s));
  return g;
}

}  // namespace

TEST(HopfModule, RegularPassesAndCoinvariantsAreSource) {
  for (const auto& name : builtin_catalog_names()) {
    H h = get(name);
    auto reg = regular_hopf_module(h);
    EXPECT_TRUE(check_hopf_module(h, reg).passed()) << name;
    EXPECT_EQ(coinvariants(h, reg), counital(h).Hs) << name;
  }
}

TEST(HopfModule, BaseFieldIsAllCoinvariant) {
  H h = get("k");
  EXPECT_EQ(coinvariants(h, regular_hopf_module(h)).dim(), 1u);
}

TEST(HopfModule, CorruptedCoactionFails) {
  H h = get("sweedler");
  auto reg = regular_hopf_module(h);
  reg.coaction(0, 2) += Q(1);
  EXPECT_FALSE(check_hopf_module(h, reg).passed());
}

TEST(Fundamental, RegularRoundTrip) {
  for (const auto& name : builtin_catalog_names()) {
    H h = get(name);
    auto fi = fundamental_isos(h, counital(h), regular_hopf_module(h));
    EXPECT_TRUE(fi.report.passed()) << name;
    EXPECT_EQ(fi.f * fi.g, Matrix<Q>::identity(h.dim())) << name;
    EXPECT_EQ(fi.g * fi.f, Matrix<Q>::identity(fi.quotient.dim())) << name;
  }
}

TEST(Fundamental, FreeHopfModulesOfGenerators) {
  for (const auto& name : {"k", "kc2", "fun-c2", "sweedler", "pairgpd2"}) {
    H h = get(name);
    auto cd = counital(h);
    for (const auto& w : generators(h)) {
      auto fh = free_hopf_module(h, w);
      EXPECT_TRUE(check_hopf_module(h, fh.hopf).passed()) << name;
      auto fi = fundamental_isos(h, cd, fh.hopf);
      EXPECT_TRUE(fi.report.passed()) << name;
      EXPECT_EQ(fi.coinv.dim(), w.dim) << name;
      EXPECT_EQ(fi.f * fi.g, Matrix<Q>::identity(fh.hopf.dim)) << name;
      EXPECT_EQ(fi.g * fi.f, Matrix<Q>::identity(fi.quotient.dim())) << name;
    }
  }
}

TEST(FreeHopfModule, UnitRecoversRegular) {
  for (const auto& name : {"kc2", "sweedler", "pairgpd2"}) {
    H h = get(name);
    auto fh = free_hopf_module(h, unit_object(h, counital(h), Side::left));
    EXPECT_TRUE(is_isomorphic(fh.hopf.module(), regular_module(h.algebra(), Side::left)).exists) << name;
  }
}

// dim H⊗̄ℓk_ε is the rank of the Δ(1) projection on H⊗k_ε.
TEST(FreeHopfModule, SweedlerTrivialDimensionByRank) {
  H h = get("sweedler");
  oracle::Mat proj(4, 4);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        Q c = h.unit()[u] * h.comult()(j * 4 + k, u) * h.counit()[k];
        if (c.is_zero()) continue;
        for (std::size_t a = 0; a < 4; ++a) {
          Vec col = oracle::prod(h, oracle::basis(4, j), oracle::basis(4, a));
          for (std::size_t r = 0; r < 4; ++r) proj(r, a) += c * col[r];
        }
      }
  std::size_t rank = oracle::dense_rank(proj);
  EXPECT_EQ(rank, 4u);
  EXPECT_EQ(free_hopf_module(h, trivial(h)).hopf.dim, rank);
}

TEST(FreeHopfModule, BalancedComparison) {
  for (const auto& name : {"k", "kc2", "fun-c2", "sweedler", "pairgpd2", "sum:kc2,pairgpd2"}) {
    H h = get(name);
    auto cd = counital(h);
    for (const auto& w : generators(h)) EXPECT_TRUE(check_free_vs_balanced(h, cd, w).passed()) << name;
  }
}

TEST(Swap, BimoduleIsomorphismOnGenerators) {
  for (const auto& name : {"k", "kc2", "fun-c2", "sweedler", "pairgpd2", "sum:sweedler,fun-c2"}) {
    H h = get(name);
    for (const auto& w : generators(h)) {
      auto s = swap_iso(h, w);
      EXPECT_TRUE(s.report.passed()) << name;
      EXPECT_EQ(oracle::dense_rank(s.phi), s.phi.rows()) << name;
    }
  }
}

TEST(Swap, UnitGivesRegularOnBothSides) {
  for (const auto& name : {"kc2", "sweedler", "pairgpd2"}) {
    H h = get(name);
    auto s = swap_iso(h, unit_object(h, counital(h), Side::left));
    auto reg = regular_bimodule(h.algebra());
    EXPECT_TRUE(is_isomorphic(s.source, reg).exists) << name;
    EXPECT_TRUE(is_isomorphic(s.target, reg).exists) << name;
  }
}

TEST(Swap, NaturalAlongHomBasis) {
  for (const auto& name : {"kc2", "sweedler", "pairgpd2"}) {
    H h = get(name);
    auto gens = generators(h);
    for (const auto& a : gens)
      for (const auto& b : gens) {
        auto hom = hom_space(a, b);
        for (std::size_t j = 0; j < hom.dim(); ++j) EXPECT_TRUE(swap_natural(h, a, b, hom.map(j))) << name;
      }
  }
}

TEST(Adjunction, FreeBimoduleAgainstLFunctor) {
  for (const auto& name : {"kc2", "sweedler", "pairgpd2"}) {
    H h = get(name);
    auto s2 = s_square_twist(h).first;
    for (const auto& w : generators(h)) {
      EXPECT_TRUE(check_ew_adjunction(h, w, regular_bimodule(h.algebra())).passed()) << name;
      EXPECT_TRUE(check_ew_adjunction(h, w, s2).passed()) << name;
    }
  }
}

// Random module maps between generators commute with the swap isomorphism.
TEST(SwapProperty, RandomHomCombinations) {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> val(-3, 3);
  for (const auto& name : {"kc2", "sweedler", "pairgpd2"}) {
    H h = get(name);
    auto gens = generators(h);
    for (int trial = 0; trial < 6; ++trial) {
      const auto& a = gens[rng() % gens.size()];
      const auto& b = gens[rng() % gens.size()];
      auto hom = hom_space(a, b);
      Matrix<Q> t(b.dim, a.dim);
      for (std::size_t j = 0; j < hom.dim(); ++j) t += hom.map(j) * Q(val(rng));
      EXPECT_TRUE(swap_natural(h, a, b, t)) << name;
    }
  }
}
