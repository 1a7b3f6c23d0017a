#pragma once

// Leaf-labeled time-consistent galled trees: e(n, g) by the labeled
// recursion, the exponential generating functions, the direct fixed-gall
// expression and the one-gall closed formula.

#include <cstddef>
#include <span>
#include <vector>

#include "galleon/bivariate.hpp"
#include "galleon/count_table.hpp"
#include "galleon/kernels.hpp"
#include "galleon/series.hpp"
#include "galleon/unlabeled.hpp"

namespace galleon::labeled {

// (2n - 3)!!, with u_1 = 1.
Integer count_trees(int n);

// (n + 2)(2n)! / (2^n n!) - 3 * 2^{n-1} n!, valid for n >= 3.
Integer one_gall_closed_form(int n);

class Recursion {
 public:
  explicit Recursion(RecursionOptions opts = {});

  Integer count(int n, int g);
  const CountTable& table(int max_n, int max_g);

 private:
  void rebuild(int max_g);
  void extend(int max_n);

  RecursionOptions opts_;
  CountTable table_;
  kernels::ConvolutionPowers powers_;
};

CountTable recursion_table(int max_n, int max_g, const RecursionOptions& opts = {});
// Literal evaluation over composition streams with explicit multinomials.
CountTable recursion_table_reference(int max_n, int max_g, const RecursionOptions& opts = {});

Integer count(int n, int g);

// Exponential generating functions.
TruncSeries u_series(std::size_t order);           // fixed point of U = t + U^2 / 2
TruncSeries u_closed_form(std::size_t order);      // 1 - sqrt(1 - 2t), exact Taylor coefficients
TruncSeries e1_series(const TruncSeries& u);
TruncSeries e2_series(const TruncSeries& u, const TruncSeries& e1);
TruncSeries a_series(std::size_t order);
TruncSeries gf(SeriesClass cls, std::size_t order);

BivarTruncSeries bivariate(std::size_t t_order, std::size_t u_order);

struct DirectTerms {
  TruncSeries convolution;  // 1/2 sum_{l=1}^{g-1} E_l E_{g-l}
  TruncSeries root_gall;    // multiplicity sum with the (3U + K - 2) kernel

  TruncSeries total() const { return convolution + root_gall; }
};

DirectTerms direct_terms(int g, std::span<const TruncSeries> lower);
std::vector<TruncSeries> eg_series_direct_all(int max_g, std::size_t order);
TruncSeries eg_series_direct(int g, std::size_t order);

}  // namespace galleon::labeled
