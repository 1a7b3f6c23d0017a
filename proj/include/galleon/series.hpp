#pragma once

// Truncated formal power series with exact rational coefficients.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "galleon/bigint.hpp"

namespace galleon {

// Generating-function convention. Stored coefficients are multiplied the same
// way in both; the convention only decides which symbolic constructors apply
// and how counts are read back (EGF counts are n! times the coefficient).
enum class Convention { ogf, egf };

std::string to_string(Convention c);

class TruncSeries {
 public:
  // Zero series with coefficients 0..order.
  explicit TruncSeries(std::size_t order = 0, Convention conv = Convention::ogf);
  TruncSeries(std::vector<Rational> coeffs, Convention conv);

  static TruncSeries constant(const Rational& c, std::size_t order, Convention conv);
  // The formal variable t.
  static TruncSeries variable(std::size_t order, Convention conv);
  static TruncSeries monomial(const Rational& c, std::size_t power, std::size_t order,
                              Convention conv);

  std::size_t order() const { return coeffs_.size() - 1; }
  Convention convention() const { return conv_; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  // Zero past the truncation order.
  Rational coefficient(std::size_t n) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  void set(std::size_t n, Rational value);

  // Truncates or zero-pads to a new order.
  TruncSeries with_order(std::size_t order) const;
  // Index of the first nonzero coefficient; order() + 1 for the zero series.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  TruncSeries& operator+=(const TruncSeries& b);
  TruncSeries& operator-=(const TruncSeries& b);
  TruncSeries& operator*=(const Rational& s);
  TruncSeries operator-() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
  Convention conv_;
};

TruncSeries operator+(TruncSeries a, const TruncSeries& b);
TruncSeries operator-(TruncSeries a, const TruncSeries& b);
TruncSeries operator*(TruncSeries a, const Rational& s);
TruncSeries operator*(const Rational& s, TruncSeries a);
// Cauchy product, see mul.
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

// Cauchy product truncated to the smaller order. Mixing conventions is a
// UsageError.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries pow(const TruncSeries& a, unsigned k);

// a(t^2), truncated to a.order().
TruncSeries substitute_square(const TruncSeries& a);

// Unordered pair with repetition: (a(t)^2 + a(t^2)) / 2. OGF only.
TruncSeries mset2(const TruncSeries& a);
// Unordered pair of labeled structures: a^2 / 2. EGF only.
TruncSeries set2(const TruncSeries& a);

// 1 / (1 - a) by back-substitution; a must have zero constant term.
TruncSeries reciprocal_one_minus(const TruncSeries& a);
// Nonempty sequences: a / (1 - a); a must have zero constant term.
TruncSeries seq_plus(const TruncSeries& a);

// n! * a_n for every n; throws ConsistencyError on a non-integral value.
std::vector<Integer> egf_to_counts(const TruncSeries& a);
// The coefficients themselves; throws ConsistencyError unless all integral.
std::vector<Integer> ogf_to_counts(const TruncSeries& a);
// Counts under the series' own convention.
std::vector<Integer> to_counts(const TruncSeries& a);

using SeriesMap = std::function<TruncSeries(const TruncSeries&)>;

struct FixedPointStats {
  std::size_t evaluations = 0;
};

// Solves x = f(x) to the given order, where f gains one order of t-adic
// agreement per application. Iterates from the zero series; the iterate
// after i evaluations is exact through t^{i-1}, so evaluation i runs at
// order min(i-1, order). Stops once two successive full-order iterates are
// identical; more than order + 2 evaluations raises ContractViolation.
// f receives its argument at the working order and must return a series of
// at least that order.
TruncSeries solve_fixed_point(const SeriesMap& f, std::size_t order, Convention conv,
                              FixedPointStats* stats = nullptr);

}  // namespace galleon
