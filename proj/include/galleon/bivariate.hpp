#pragma once

// Doubly truncated series in (t, u): t counts leaves, u counts galls.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "galleon/bigint.hpp"
#include "galleon/series.hpp"

namespace galleon {

class BivarTruncSeries {
 public:
  explicit BivarTruncSeries(std::size_t t_order = 0, std::size_t u_order = 0,
                            Convention conv = Convention::ogf);

  static BivarTruncSeries monomial(const Rational& c, std::size_t t_power, std::size_t u_power,
                                   std::size_t t_order, std::size_t u_order, Convention conv);
  // u^j * s(t), with s truncated or padded to t_order.
  static BivarTruncSeries lift(const TruncSeries& s, std::size_t u_power, std::size_t u_order);

  std::size_t t_order() const { return t_order_; }
  std::size_t u_order() const { return u_order_; }
  Convention convention() const { return conv_; }

  const Rational& at(std::size_t n, std::size_t g) const { return coeffs_[n * (u_order_ + 1) + g]; }
  void set(std::size_t n, std::size_t g, Rational value);
  std::span<const Rational> coefficients() const { return coeffs_; }

  // Coefficient of u^g as a series in t.
  TruncSeries slice(std::size_t g) const;
  BivarTruncSeries with_orders(std::size_t t_order, std::size_t u_order) const;

  BivarTruncSeries& operator+=(const BivarTruncSeries& b);
  BivarTruncSeries& operator-=(const BivarTruncSeries& b);
  BivarTruncSeries& operator*=(const Rational& s);

  friend bool operator==(const BivarTruncSeries& a, const BivarTruncSeries& b) = default;

 private:
  std::size_t t_order_;
  std::size_t u_order_;
  Convention conv_;
  std::vector<Rational> coeffs_;  // row-major in t
};

BivarTruncSeries operator+(BivarTruncSeries a, const BivarTruncSeries& b);
BivarTruncSeries operator-(BivarTruncSeries a, const BivarTruncSeries& b);
BivarTruncSeries operator*(BivarTruncSeries a, const Rational& s);
BivarTruncSeries operator*(const BivarTruncSeries& a, const BivarTruncSeries& b);

BivarTruncSeries mul(const BivarTruncSeries& a, const BivarTruncSeries& b);
// a(t^2, u^2).
BivarTruncSeries substitute_square(const BivarTruncSeries& a);
// u * a(t, u), truncated in u.
BivarTruncSeries times_u(const BivarTruncSeries& a);
BivarTruncSeries mset2(const BivarTruncSeries& a);
BivarTruncSeries set2(const BivarTruncSeries& a);
// 1 / (1 - a); a must vanish at (0, 0).
BivarTruncSeries reciprocal_one_minus(const BivarTruncSeries& a);
BivarTruncSeries seq_plus(const BivarTruncSeries& a);

using BivarSeriesMap = std::function<BivarTruncSeries(const BivarTruncSeries&)>;

// Same contract as solve_fixed_point, with contraction measured by the
// t-valuation. The u order stays fixed throughout.
BivarTruncSeries bivar_solve_fixed_point(const BivarSeriesMap& f, std::size_t t_order,
                                         std::size_t u_order, Convention conv,
                                         FixedPointStats* stats = nullptr);

}  // namespace galleon
