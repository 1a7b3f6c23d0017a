#pragma once

// Integer convolution kernels shared by the series arithmetic and the
// counting recursions. Every kernel has a serial reference path and an
// OpenMP path; both produce identical results.

#include <cstddef>
#include <span>
#include <vector>

#include "galleon/bigint.hpp"

namespace galleon::kernels {

enum class Exec { serial, parallel };

// c_n = sum_{i=0..n} a_i b_{n-i} for 0 <= n <= order. Entries past the end of
// a or b are zero.
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t order, Exec exec = Exec::parallel);

// Two-dimensional truncated Cauchy product on row-major
// (t_order + 1) x (u_order + 1) grids.
std::vector<Integer> convolve2d(std::span<const Integer> a, std::span<const Integer> b,
                                std::size_t t_order, std::size_t u_order,
                                Exec exec = Exec::parallel);

// Powers F^k of a bivariate table F(t,u) = sum_{m>=1,h} base(m,h) t^m u^h,
// grown one leaf count at a time. P_k(n, h) is the sum, over compositions
// c of n into k parts and gall splits summing to h, of prod base(c_i, h_i).
// With binomial weighting each term also carries the multinomial
// n! / (c_1! ... c_k!), which is the labeled product.
class ConvolutionPowers {
 public:
  ConvolutionPowers(std::size_t max_h, bool binomial_weight);

  std::size_t max_h() const { return max_h_; }
  // Number of base rows supplied so far.
  std::size_t rows() const { return base_.size(); }

  // Computes P_k(n, .) for 2 <= k <= n, where n = rows() + 1. Needs only
  // base rows 1..n-1.
  void extend_powers(Exec exec = Exec::parallel);

  // Supplies base row n = rows() + 1 (length max_h + 1); becomes P_1(n, .).
  // extend_powers must have been called for this n first.
  void add_base_row(std::vector<Integer> row);

  // Zero when k == 0, k > n or h > max_h.
  const Integer& power(std::size_t k, std::size_t n, std::size_t h) const;

 private:
  std::size_t max_h_;
  bool binomial_weight_;
  std::vector<std::vector<Integer>> base_;  // base_[n-1][h]
  // powers_[n-1][k-2][h] for k = 2..n
  std::vector<std::vector<std::vector<Integer>>> powers_;
  Integer zero_ = 0;
};

}  // namespace galleon::kernels
