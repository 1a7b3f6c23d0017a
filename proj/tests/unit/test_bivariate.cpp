#include <gtest/gtest.h>

#include <random>

#include "galleon/bivariate.hpp"
#include "galleon/errors.hpp"
#include "galleon/labeled.hpp"
#include "galleon/unlabeled.hpp"

using namespace galleon;

namespace {

BivarTruncSeries random_bivar(std::mt19937& rng, std::size_t t, std::size_t u) {
  std::uniform_int_distribution<int> d(-6, 6);
  BivarTruncSeries s(t, u);
  for (std::size_t n = 0; n <= t; ++n)
    for (std::size_t g = 0; g <= u; ++g) s.set(n, g, Rational(d(rng), 1 + (n + g) % 3));
  return s;
}

}  // namespace

TEST(Bivariate, RingAxioms) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_bivar(rng, 8, 3), b = random_bivar(rng, 8, 3), c = random_bivar(rng, 8, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Bivariate, SubstituteSquareDoublesBothIndices) {
  BivarTruncSeries a(6, 4);
  a.set(1, 1, 3);
  a.set(2, 0, 5);
  a.set(3, 2, 7);
  const auto s = substitute_square(a);
  EXPECT_EQ(s.at(2, 2), 3);
  EXPECT_EQ(s.at(4, 0), 5);
  EXPECT_EQ(s.at(6, 4), 7);
  EXPECT_EQ(s.at(3, 2), 0);
}

TEST(Bivariate, ReciprocalInvertsOneMinus) {
  std::mt19937 rng(23);
  auto a = random_bivar(rng, 7, 3);
  a.set(0, 0, 0);
  const auto one = BivarTruncSeries::monomial(1, 0, 0, 7, 3, Convention::ogf);
  EXPECT_EQ(reciprocal_one_minus(a) * (one - a), one);
  a.set(0, 0, 1);
  EXPECT_THROW(reciprocal_one_minus(a), DomainError);
}

TEST(Bivariate, UnlabeledGallGenerating) {
  const auto G = unlabeled::bivariate(10, 4);
  EXPECT_EQ(G.at(5, 2), 2);
  EXPECT_EQ(G.at(9, 4), 19);
  EXPECT_EQ(G.at(7, 3), 6);
  EXPECT_EQ(G.slice(0), unlabeled::u_series(10));
}

TEST(Bivariate, LabeledGallGenerating) {
  const auto G = labeled::bivariate(9, 4);
  EXPECT_EQ(G.at(4, 1) * factorial(4), 54);
  EXPECT_EQ(G.at(5, 2) * factorial(5), 90);
  EXPECT_EQ(G.at(9, 4) * factorial(9), 1247400);
  EXPECT_EQ(G.slice(0), labeled::u_series(9));
}

TEST(Bivariate, SupportBound) {
  const auto G = unlabeled::bivariate(16, 8);
  for (std::size_t n = 1; n <= 16; ++n)
    for (std::size_t g = 0; g <= 8; ++g)
      EXPECT_EQ(sgn(G.at(n, g)) > 0, g <= (n - 1) / 2) << n << "," << g;
}

TEST(Bivariate, FixedPointContractViolation) {
  const auto bad = [](const BivarTruncSeries& x) {
    return BivarTruncSeries::monomial(1, 0, 0, x.t_order(), x.u_order(), Convention::ogf) + x;
  };
  EXPECT_THROW(bivar_solve_fixed_point(bad, 4, 2, Convention::ogf), ContractViolation);
}
