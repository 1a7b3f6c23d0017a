#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "galleon/compositions.hpp"
#include "galleon/kernels.hpp"

using namespace galleon;
using kernels::Exec;

namespace {

std::vector<Integer> random_ints(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<Integer> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST(Kernels, ConvolveMatchesSchoolbook) {
  std::mt19937 rng(7);
  const auto a = random_ints(rng, 40);
  const auto b = random_ints(rng, 33);
  const auto c = kernels::convolve(a, b, 50, Exec::serial);
  ASSERT_EQ(c.size(), 51u);
  for (std::size_t n = 0; n <= 50; ++n) {
    Integer s = 0;
    for (std::size_t i = 0; i <= n; ++i)
      if (i < a.size() && n - i < b.size()) s += a[i] * b[n - i];
    EXPECT_EQ(c[n], s) << n;
  }
}

TEST(Kernels, ParallelEqualsSerial) {
  std::mt19937 rng(11);
  const auto a = random_ints(rng, 120);
  const auto b = random_ints(rng, 120);
  EXPECT_EQ(kernels::convolve(a, b, 119, Exec::serial), kernels::convolve(a, b, 119, Exec::parallel));
  const auto g1 = random_ints(rng, 31 * 7);
  const auto g2 = random_ints(rng, 31 * 7);
  EXPECT_EQ(kernels::convolve2d(g1, g2, 30, 6, Exec::serial), kernels::convolve2d(g1, g2, 30, 6, Exec::parallel));
}

TEST(Kernels, Convolve2dMatchesSchoolbook) {
  std::mt19937 rng(3);
  const std::size_t T = 9, U = 3;
  const auto a = random_ints(rng, (T + 1) * (U + 1));
  const auto b = random_ints(rng, (T + 1) * (U + 1));
  const auto c = kernels::convolve2d(a, b, T, U, Exec::serial);
  for (std::size_t n = 0; n <= T; ++n)
    for (std::size_t g = 0; g <= U; ++g) {
      Integer s = 0;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= g; ++j) s += a[i * (U + 1) + j] * b[(n - i) * (U + 1) + (g - j)];
      EXPECT_EQ(c[n * (U + 1) + g], s);
    }
}

// P_k(n, h) against the literal sum over compositions of n into k parts and
// splits of h into k nonnegative parts.
void check_powers(bool labeled, Exec exec) {
  const std::size_t H = 2;
  const int N = 8;
  std::vector<std::vector<Integer>> base(N + 1, std::vector<Integer>(H + 1));
  for (int m = 1; m <= N; ++m)
    for (std::size_t h = 0; h <= H; ++h) base[m][h] = (m * 3 + static_cast<int>(h) * 5) % 7 + (h == 0);
  kernels::ConvolutionPowers p(H, labeled);
  for (int m = 1; m <= N; ++m) {
    p.extend_powers(exec);
    p.add_base_row(base[m]);
  }
  for (unsigned n = 2; n <= static_cast<unsigned>(N); ++n)
    for (unsigned k = 2; k <= n; ++k)
      for (unsigned h = 0; h <= H; ++h) {
        Integer expected = 0;
        for (const auto& c : compositions(n, k).collect()) {
          for (const auto& d : compositions(h + k, k).collect()) {
            Integer prod = labeled ? multinomial(c.parts) : Integer(1);
            for (std::size_t i = 0; i < k; ++i) prod *= base[c[i]][d[i] - 1];
            expected += prod;
          }
        }
        EXPECT_EQ(p.power(k, n, h), expected) << "k=" << k << " n=" << n << " h=" << h;
      }
  EXPECT_EQ(p.power(0, 3, 0), 0);
  EXPECT_EQ(p.power(5, 3, 0), 0);
  EXPECT_EQ(p.power(2, 3, H + 1), 0);
  EXPECT_EQ(p.power(1, 4, 1), base[4][1]);
}

TEST(Kernels, ConvolutionPowersUnweighted) { check_powers(false, Exec::serial); }
TEST(Kernels, ConvolutionPowersBinomialWeighted) { check_powers(true, Exec::serial); }
TEST(Kernels, ConvolutionPowersParallel) {
  check_powers(false, Exec::parallel);
  check_powers(true, Exec::parallel);
}
