#include <gtest/gtest.h>

#include "galleon/asymptotics.hpp"
#include "galleon/errors.hpp"
#include "galleon/labeled.hpp"
#include "galleon/unlabeled.hpp"

using namespace galleon;

namespace {

// |a - b| <= 10^-digits * |b|
bool close_rel(const Real& a, const Real& b, int digits) { return abs(a - b) <= abs(b) * pow(Real(10), -digits); }

}  // namespace

TEST(Asymptotics, WorkingPrecision) {
  EXPECT_GE(working_digits(), 20u);
  const unsigned before = working_digits();
  set_working_digits(5);
  EXPECT_EQ(working_digits(), 20u);
  set_working_digits(before);
  EXPECT_EQ(working_digits(), before);
}

TEST(Asymptotics, QuotedConstantsVerbatim) {
  const auto p = AsymptoticParams::quoted();
  EXPECT_EQ(p.gamma, Real("1.13000"));
  EXPECT_EQ(p.rho, Real("0.4027"));
  EXPECT_EQ(p.source, ParamSource::quoted);
}

TEST(Asymptotics, RadiusEstimates) {
  const auto u = estimate_singularity(ogf_to_counts(unlabeled::u_series(199)), -1.5);
  EXPECT_NEAR(u.rho_hat.convert_to<double>(), 0.4027, 0.001);
  EXPECT_NEAR(u.gamma_hat.convert_to<double>(), 1.13, 0.001);
  EXPECT_NEAR(u.exponent_hat.convert_to<double>(), -1.5, 0.05);
  EXPECT_EQ(u.order_used, 200);

  const auto a = estimate_singularity(ogf_to_counts(unlabeled::a_series(199)), -1.5);
  EXPECT_NEAR(a.rho_hat.convert_to<double>(), 0.2073, 0.001);
  // A_n ~ (0.0779...) n^{-3/2} rho^{-n}: K = gamma_hat / |Gamma(-1/2)|.
  const Real pi = boost::math::constants::pi<Real>();
  EXPECT_NEAR((a.gamma_hat / (2 * sqrt(pi))).convert_to<double>(), 0.0779, 0.0005);

  std::vector<Integer> cat;
  for (unsigned n = 0; n < 100; ++n) cat.push_back(catalan(n));
  EXPECT_NEAR(estimate_singularity(cat, -1.5).rho_hat.convert_to<double>(), 0.25, 0.0005);

  const auto la = estimate_singularity_egf(egf_to_counts(labeled::a_series(120)), -1.5);
  EXPECT_GT(la.rho_hat, 0);
  EXPECT_LT(la.rho_hat, Real("0.5"));

  EXPECT_THROW(estimate_singularity(std::vector<Integer>(49, 1), -1.5), DomainError);
}

TEST(Asymptotics, UnlabeledSpecializations) {
  const auto p = AsymptoticParams::quoted();
  const Real pi = boost::math::constants::pi<Real>();
  for (int n : {10, 100}) {
    const Real nn = n;
    const Real g1 = 1 / (pow(p.gamma, 3) * sqrt(pi)) * sqrt(nn) * pow(p.rho, -n);
    EXPECT_TRUE(close_rel(asym_unlabeled(n, 1, p), g1, 12)) << n;
    const Real g2 = 1 / (3 * pow(p.gamma, 7) * sqrt(pi)) * pow(nn, Real(5) / 2) * pow(p.rho, -n);
    EXPECT_TRUE(close_rel(asym_unlabeled(n, 2, p), g2, 12)) << n;
    const Real g0 = p.gamma / (2 * sqrt(pi)) * pow(nn, Real(-3) / 2) * pow(p.rho, -n);
    EXPECT_TRUE(close_rel(asym_unlabeled(n, 0, p), g0, 12)) << n;
  }
  EXPECT_EQ(asym_unlabeled_formula(1), "2^1/(2! * gamma^3 * sqrt(pi)) * n^(1/2) * rho^(-n)");
}

TEST(Asymptotics, LabeledSpecializations) {
  const Real pi = boost::math::constants::pi<Real>();
  for (int n : {10, 100}) {
    const Real nn = n;
    const Real base = to_real(Integer(pow2(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n))));
    EXPECT_TRUE(close_rel(asym_labeled(n, 1), sqrt(nn) / sqrt(pi) * base, 12));
    EXPECT_TRUE(close_rel(asym_labeled(n, 2), pow(nn, Real(5) / 2) / (3 * sqrt(pi)) * base, 12));
  }
  // The Stirling form converges to the n! form.
  const Real r200 = asym_labeled_stirling(200, 2) / asym_labeled(200, 2);
  EXPECT_TRUE(abs(r200 - 1) < Real("0.001"));
}

TEST(Asymptotics, PositiveAndIncreasing) {
  const auto p = AsymptoticParams::estimated();
  for (int g = 0; g <= 4; ++g) {
    Real prev_u = 0, prev_l = 0;
    for (int n = 2 * g + 3; n <= 150; ++n) {
      const Real u = asym_unlabeled(n, g, p), l = asym_labeled(n, g);
      EXPECT_GT(u, prev_u);
      EXPECT_GT(l, prev_l);
      prev_u = u;
      prev_l = l;
    }
  }
}

TEST(Asymptotics, ClassRatioAndCatalanIdentity) {
  EXPECT_EQ(class_ratio(0), 1);
  EXPECT_EQ(class_ratio(1), 1);
  EXPECT_EQ(class_ratio(3), Rational(1, 15));
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(class_ratio(k), Rational(1, double_factorial(2L * k - 1)));
  for (int g = 1; g <= 10; ++g) EXPECT_EQ(catalan_over_power(g), double_factorial_over_factorial(g)) << g;
  EXPECT_THROW(class_ratio(-1), DomainError);
}

TEST(Asymptotics, ConstantSensitivity) {
  // The quoted constants carry 4-6 figures. Near n = 50 the two parameter
  // sets stay within 0.1% of each other for small g.
  const auto q = AsymptoticParams::quoted();
  const auto e = AsymptoticParams::estimated();
  for (int g = 0; g <= 4; ++g) {
    const Real shift = abs(asym_unlabeled(50, g, q) / asym_unlabeled(50, g, e) - 1);
    EXPECT_LT(shift, Real("0.001")) << g;
    EXPECT_GT(shift, 0) << g;
  }
}
