#include <gtest/gtest.h>

#include "wha/scalar.hpp"

using wha::Field;
using wha::ModP;
using wha::Rational;

TEST(Rational, LowestTerms) {
  Rational a(1, 2), b(1, 3);
  EXPECT_EQ((a + b).to_string(), "5/6");
  EXPECT_EQ(Rational(4, -6).to_string(), "-2/3");
  EXPECT_EQ((Rational(1, 2) + Rational(1, 2)).to_string(), "1");
}

TEST(Rational, ParseRejectsMalformed) {
  EXPECT_EQ(Rational::parse("-3/9").to_string(), "-1/3");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("2/"), std::invalid_argument);
}

TEST(ModP, ArithmeticAndInverse) {
  Field<ModP> f(7);
  ModP a = f.from_int(3);
  EXPECT_EQ((a * a.inverse()).value(), 1);
  EXPECT_EQ(f.format(-a), "4");
  EXPECT_EQ(f.from_fraction(1, 2).value(), 4);
  EXPECT_TRUE(ModP(0) == f.from_int(7));
  EXPECT_TRUE(ModP(1) == f.from_int(8));
}

TEST(ModP, FieldValidation) {
  EXPECT_THROW(Field<ModP>(9), std::invalid_argument);
  Field<ModP> f(5);
  EXPECT_THROW(f.parse("5"), std::invalid_argument);
  EXPECT_THROW(f.parse("-1"), std::invalid_argument);
  EXPECT_EQ(f.parse("4").value(), 4);
}

TEST(ModP, EveryNonzeroResidueInverts) {
  for (std::uint32_t p : {2u, 3u, 5u, 101u, 65521u}) {
    Field<ModP> f(p);
    for (std::int64_t k = 1; k < std::min<std::int64_t>(p, 200); ++k) {
      ModP x = f.from_int(k);
      EXPECT_TRUE((x * x.inverse()).is_one()) << p << " " << k;
    }
  }
}
