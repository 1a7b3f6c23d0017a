#include <gtest/gtest.h>

#include "galleon/bivariate.hpp"
#include "galleon/errors.hpp"
#include "galleon/labeled.hpp"
#include "galleon/reference_tables.hpp"
#include "galleon/unlabeled.hpp"

using namespace galleon;

TEST(Labeled, TreeCounts) {
  EXPECT_EQ(labeled::count_trees(1), 1);
  EXPECT_EQ(labeled::count_trees(4), 15);
  EXPECT_EQ(labeled::count_trees(10), 34459425);
  EXPECT_THROW(labeled::count_trees(0), DomainError);
  // (2n-3)!! = (2n-2)! / (2^{n-1} (n-1)!)
  for (unsigned n = 2; n <= 20; ++n)
    EXPECT_EQ(labeled::count_trees(static_cast<int>(n)), factorial(2 * n - 2) / (pow2(n - 1) * factorial(n - 1)));
}

TEST(Labeled, RecursionExamples) {
  EXPECT_EQ(labeled::count(4, 1), 54);
  EXPECT_EQ(labeled::count(7, 3), 7560);
  EXPECT_EQ(labeled::count(10, 2), 7927227000);
  EXPECT_EQ(labeled::count(1, 0), 1);
  EXPECT_EQ(labeled::count(1, 2), 0);
  EXPECT_THROW(labeled::count(0, 1), DomainError);
}

TEST(Labeled, GoldenTable) {
  EXPECT_EQ(labeled::recursion_table(golden::kMaxN, golden::kMaxG), golden::table(Kind::labeled));
}

TEST(Labeled, ConvolutionPowersMatchLiteralStreams) {
  EXPECT_EQ(labeled::recursion_table(10, 4), labeled::recursion_table_reference(10, 4));
}

TEST(Labeled, ClosedAndFixedPointUAgree) {
  for (std::size_t order : {1u, 5u, 20u}) EXPECT_EQ(labeled::u_series(order), labeled::u_closed_form(order));
  const auto counts = egf_to_counts(labeled::u_closed_form(20));
  for (int n = 2; n <= 20; ++n) EXPECT_EQ(counts[static_cast<std::size_t>(n)], double_factorial(2L * n - 3));
}

TEST(Labeled, ClassSeries) {
  EXPECT_EQ(egf_to_counts(labeled::gf(SeriesClass::E1, 5))[5], 855);
  EXPECT_EQ(egf_to_counts(labeled::gf(SeriesClass::E2, 6))[6], 5040);
  EXPECT_EQ(egf_to_counts(labeled::gf(SeriesClass::A, 8))[8], 12709305);
}

TEST(Labeled, OneGallClosedFormula) {
  EXPECT_EQ(labeled::one_gall_closed_form(3), 3);
  EXPECT_EQ(labeled::one_gall_closed_form(4), 54);
  EXPECT_EQ(labeled::one_gall_closed_form(6), 14040);
  EXPECT_THROW(labeled::one_gall_closed_form(2), DomainError);
  const auto t = labeled::recursion_table(25, 1);
  for (int n = 3; n <= 25; ++n) EXPECT_EQ(labeled::one_gall_closed_form(n), t.at(n, 1)) << n;
}

TEST(Labeled, DirectSeries) {
  const auto e = labeled::eg_series_direct_all(4, 20);
  const auto u = labeled::u_series(20);
  const auto e1 = labeled::e1_series(u);
  EXPECT_EQ(e[1], e1);
  EXPECT_EQ(e[2], labeled::e2_series(u, e1));
  EXPECT_EQ(egf_to_counts(e[4])[9], 1247400);
  EXPECT_THROW(labeled::eg_series_direct(0, 5), DomainError);
}

TEST(Labeled, RootGallTermAgreesWithFaaDiBrunoExpansion) {
  const std::size_t N = 16;
  const auto e = labeled::eg_series_direct_all(2, N);
  const auto s = BivarTruncSeries::lift(e[0], 0, 2) + BivarTruncSeries::lift(e[1], 1, 2) +
                 BivarTruncSeries::lift(e[2], 2, 2);
  const auto r = reciprocal_one_minus(s);
  const auto f = s * s * s * r * r;
  EXPECT_EQ(labeled::direct_terms(3, e).root_gall * Rational(2), f.slice(2));
}

TEST(Labeled, FourWayAgreementAndBounds) {
  const auto rec = labeled::recursion_table(25, 5);
  const auto G = labeled::bivariate(25, 5);
  const auto e = labeled::eg_series_direct_all(5, 25);
  const auto a = egf_to_counts(labeled::a_series(25));
  const auto full = labeled::recursion_table(25, max_galls(25));
  const auto unl = unlabeled::recursion_table(25, 5);
  for (int n = 1; n <= 25; ++n) {
    const auto sn = static_cast<std::size_t>(n);
    const Rational nf(factorial(static_cast<unsigned>(n)));
    for (int g = 0; g <= 5; ++g) {
      const auto sg = static_cast<std::size_t>(g);
      EXPECT_EQ(Rational(rec.at(n, g)), G.at(sn, sg) * nf) << n << "," << g;
      EXPECT_EQ(Rational(rec.at(n, g)), e[sg][sn] * nf) << n << "," << g;
      EXPECT_GE(rec.at(n, g), unl.at(n, g));
      EXPECT_LE(rec.at(n, g), nf.get_num() * unl.at(n, g));
    }
    EXPECT_EQ(full.row_total(n), a[sn]) << n;
  }
}
