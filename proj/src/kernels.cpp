#include "galleon/kernels.hpp"

#include <algorithm>
#include <utility>

#include "galleon/errors.hpp"

namespace galleon::kernels {

namespace {

void convolve_at(std::span<const Integer> a, std::span<const Integer> b, std::size_t n,
                 Integer& out) {
  out = 0;
  if (a.empty() || b.empty()) return;
  const std::size_t lo = n >= b.size() ? n - (b.size() - 1) : 0;
  const std::size_t hi = std::min(n, a.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (sgn(a[i]) == 0) continue;
    mpz_addmul(out.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
  }
}

void convolve2d_at(std::span<const Integer> a, std::span<const Integer> b, std::size_t n,
                   std::size_t u_order, std::vector<Integer>& c) {
  const std::size_t w = u_order + 1;
  for (std::size_t g = 0; g <= u_order; ++g) {
    Integer& out = c[n * w + g];
    out = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= g; ++j) {
        const Integer& x = a[i * w + j];
        if (sgn(x) == 0) continue;
        mpz_addmul(out.get_mpz_t(), x.get_mpz_t(), b[(n - i) * w + (g - j)].get_mpz_t());
      }
    }
  }
}

}  // namespace

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t order, Exec exec) {
  std::vector<Integer> c(order + 1);
  const long long len = static_cast<long long>(order) + 1;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long n = 0; n < len; ++n) convolve_at(a, b, static_cast<std::size_t>(n), c[n]);
  } else {
    for (long long n = 0; n < len; ++n) convolve_at(a, b, static_cast<std::size_t>(n), c[n]);
  }
  return c;
}

std::vector<Integer> convolve2d(std::span<const Integer> a, std::span<const Integer> b,
                                std::size_t t_order, std::size_t u_order, Exec exec) {
  const std::size_t cells = (t_order + 1) * (u_order + 1);
  if (a.size() != cells || b.size() != cells)
    throw UsageError("convolve2d: grid size does not match orders");
  std::vector<Integer> c(cells);
  const long long len = static_cast<long long>(t_order) + 1;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 2)
    for (long long n = 0; n < len; ++n) convolve2d_at(a, b, static_cast<std::size_t>(n), u_order, c);
  } else {
    for (long long n = 0; n < len; ++n) convolve2d_at(a, b, static_cast<std::size_t>(n), u_order, c);
  }
  return c;
}

ConvolutionPowers::ConvolutionPowers(std::size_t max_h, bool binomial_weight)
    : max_h_(max_h), binomial_weight_(binomial_weight) {}

const Integer& ConvolutionPowers::power(std::size_t k, std::size_t n, std::size_t h) const {
  if (k == 0 || n == 0 || k > n || h > max_h_) return zero_;
  if (k == 1) return n <= base_.size() ? base_[n - 1][h] : zero_;
  if (n > powers_.size()) return zero_;
  return powers_[n - 1][k - 2][h];
}

void ConvolutionPowers::extend_powers(Exec exec) {
  const std::size_t n = base_.size() + 1;
  if (powers_.size() != base_.size())
    throw UsageError("ConvolutionPowers: powers already extended for this row");
  const std::size_t width = max_h_ + 1;
  std::vector<std::vector<Integer>> row(n >= 2 ? n - 1 : 0, std::vector<Integer>(width));

  std::vector<Integer> weights(n);
  for (std::size_t j = 1; j < n; ++j) weights[j] = binomial_weight_ ? binomial(n, j) : Integer(1);

  auto cell = [&](std::size_t k, std::size_t h) {
    Integer acc = 0;
    Integer term;
    // First part has j leaves; the remaining k-1 parts cover n-j >= k-1 leaves.
    for (std::size_t j = 1; j + (k - 1) <= n; ++j) {
      term = 0;
      for (std::size_t hp = 0; hp <= h; ++hp) {
        const Integer& x = base_[j - 1][hp];
        if (sgn(x) == 0) continue;
        const Integer& y = power(k - 1, n - j, h - hp);
        if (sgn(y) == 0) continue;
        mpz_addmul(term.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
      if (sgn(term) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), term.get_mpz_t(), weights[j].get_mpz_t());
    }
    row[k - 2][h] = std::move(acc);
  };

  const long long jobs = n >= 2 ? static_cast<long long>((n - 1) * width) : 0;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long idx = 0; idx < jobs; ++idx)
      cell(static_cast<std::size_t>(idx) / width + 2, static_cast<std::size_t>(idx) % width);
  } else {
    for (long long idx = 0; idx < jobs; ++idx)
      cell(static_cast<std::size_t>(idx) / width + 2, static_cast<std::size_t>(idx) % width);
  }
  powers_.push_back(std::move(row));
}

void ConvolutionPowers::add_base_row(std::vector<Integer> row) {
  if (powers_.size() != base_.size() + 1)
    throw UsageError("ConvolutionPowers: extend_powers must precede add_base_row");
  if (row.size() != max_h_ + 1) throw UsageError("ConvolutionPowers: row width mismatch");
  base_.push_back(std::move(row));
}

}  // namespace galleon::kernels
