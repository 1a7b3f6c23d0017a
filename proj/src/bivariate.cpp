#include "galleon/bivariate.hpp"

#include <algorithm>
#include <utility>

#include "galleon/errors.hpp"
#include "galleon/kernels.hpp"

namespace galleon {

namespace {

void require_compatible(const BivarTruncSeries& a, const BivarTruncSeries& b, const char* op) {
  if (a.convention() != b.convention())
    throw UsageError(std::string(op) + ": mixing ogf and egf series");
}

}  // namespace

BivarTruncSeries::BivarTruncSeries(std::size_t t_order, std::size_t u_order, Convention conv)
    : t_order_(t_order), u_order_(u_order), conv_(conv), coeffs_((t_order + 1) * (u_order + 1)) {}

BivarTruncSeries BivarTruncSeries::monomial(const Rational& c, std::size_t t_power,
                                            std::size_t u_power, std::size_t t_order,
                                            std::size_t u_order, Convention conv) {
  BivarTruncSeries s(t_order, u_order, conv);
  if (t_power <= t_order && u_power <= u_order) s.set(t_power, u_power, c);
  return s;
}

BivarTruncSeries BivarTruncSeries::lift(const TruncSeries& s, std::size_t u_power,
                                        std::size_t u_order) {
  BivarTruncSeries r(s.order(), u_order, s.convention());
  if (u_power > u_order) return r;
  for (std::size_t n = 0; n <= s.order(); ++n) r.set(n, u_power, s[n]);
  return r;
}

void BivarTruncSeries::set(std::size_t n, std::size_t g, Rational value) {
  if (n > t_order_ || g > u_order_) throw UsageError("BivarTruncSeries::set: index out of range");
  coeffs_[n * (u_order_ + 1) + g] = std::move(value);
}

TruncSeries BivarTruncSeries::slice(std::size_t g) const {
  TruncSeries s(t_order_, conv_);
  if (g > u_order_) return s;
  for (std::size_t n = 0; n <= t_order_; ++n) s.set(n, at(n, g));
  return s;
}

BivarTruncSeries BivarTruncSeries::with_orders(std::size_t t_order, std::size_t u_order) const {
  BivarTruncSeries r(t_order, u_order, conv_);
  for (std::size_t n = 0; n <= std::min(t_order, t_order_); ++n)
    for (std::size_t g = 0; g <= std::min(u_order, u_order_); ++g) r.set(n, g, at(n, g));
  return r;
}

BivarTruncSeries& BivarTruncSeries::operator+=(const BivarTruncSeries& b) {
  require_compatible(*this, b, "operator+");
  if (b.t_order_ < t_order_ || b.u_order_ < u_order_)
    *this = with_orders(std::min(t_order_, b.t_order_), std::min(u_order_, b.u_order_));
  for (std::size_t n = 0; n <= t_order_; ++n)
    for (std::size_t g = 0; g <= u_order_; ++g) coeffs_[n * (u_order_ + 1) + g] += b.at(n, g);
  return *this;
}

BivarTruncSeries& BivarTruncSeries::operator-=(const BivarTruncSeries& b) {
  require_compatible(*this, b, "operator-");
  if (b.t_order_ < t_order_ || b.u_order_ < u_order_)
    *this = with_orders(std::min(t_order_, b.t_order_), std::min(u_order_, b.u_order_));
  for (std::size_t n = 0; n <= t_order_; ++n)
    for (std::size_t g = 0; g <= u_order_; ++g) coeffs_[n * (u_order_ + 1) + g] -= b.at(n, g);
  return *this;
}

BivarTruncSeries& BivarTruncSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

BivarTruncSeries operator+(BivarTruncSeries a, const BivarTruncSeries& b) { return a += b; }
BivarTruncSeries operator-(BivarTruncSeries a, const BivarTruncSeries& b) { return a -= b; }
BivarTruncSeries operator*(BivarTruncSeries a, const Rational& s) { return a *= s; }
BivarTruncSeries operator*(const BivarTruncSeries& a, const BivarTruncSeries& b) { return mul(a, b); }

BivarTruncSeries mul(const BivarTruncSeries& a, const BivarTruncSeries& b) {
  require_compatible(a, b, "mul");
  const std::size_t nt = std::min(a.t_order(), b.t_order());
  const std::size_t nu = std::min(a.u_order(), b.u_order());
  const auto fits = [&](const BivarTruncSeries& s) { return s.t_order() == nt && s.u_order() == nu; };
  const BivarTruncSeries a_cut = fits(a) ? BivarTruncSeries() : a.with_orders(nt, nu);
  const BivarTruncSeries b_cut = fits(b) ? BivarTruncSeries() : b.with_orders(nt, nu);
  const auto ac = fits(a) ? a.coefficients() : a_cut.coefficients();
  const auto bc = fits(b) ? b.coefficients() : b_cut.coefficients();

  const Integer da = common_denominator(ac);
  const Integer db = common_denominator(bc);
  auto numerators = [](std::span<const Rational> q, const Integer& den) {
    std::vector<Integer> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (sgn(q[i]) == 0) continue;
      Integer f;
      mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), q[i].get_den_mpz_t());
      out[i] = q[i].get_num() * f;
    }
    return out;
  };
  const auto an = numerators(ac, da);
  const auto bn = numerators(bc, db);
  auto prod = kernels::convolve2d(an, bn, nt, nu);
  const Integer den = da * db;
  BivarTruncSeries r(nt, nu, a.convention());
  for (std::size_t n = 0; n <= nt; ++n) {
    for (std::size_t g = 0; g <= nu; ++g) {
      const Integer& p = prod[n * (nu + 1) + g];
      if (sgn(p) == 0) continue;
      Rational q(p, den);
      q.canonicalize();
      r.set(n, g, std::move(q));
    }
  }
  return r;
}

BivarTruncSeries substitute_square(const BivarTruncSeries& a) {
  BivarTruncSeries r(a.t_order(), a.u_order(), a.convention());
  for (std::size_t n = 0; 2 * n <= a.t_order(); ++n)
    for (std::size_t g = 0; 2 * g <= a.u_order(); ++g) r.set(2 * n, 2 * g, a.at(n, g));
  return r;
}

BivarTruncSeries times_u(const BivarTruncSeries& a) {
  BivarTruncSeries r(a.t_order(), a.u_order(), a.convention());
  for (std::size_t n = 0; n <= a.t_order(); ++n)
    for (std::size_t g = 1; g <= a.u_order(); ++g) r.set(n, g, a.at(n, g - 1));
  return r;
}

BivarTruncSeries mset2(const BivarTruncSeries& a) {
  if (a.convention() != Convention::ogf)
    throw UsageError("mset2: unordered pairs with repetition need an ogf series; use set2");
  return (mul(a, a) + substitute_square(a)) * Rational(1, 2);
}

BivarTruncSeries set2(const BivarTruncSeries& a) {
  if (a.convention() != Convention::egf)
    throw UsageError("set2: labeled unordered pairs need an egf series; use mset2");
  return mul(a, a) * Rational(1, 2);
}

BivarTruncSeries reciprocal_one_minus(const BivarTruncSeries& a) {
  if (sgn(a.at(0, 0)) != 0)
    throw DomainError("reciprocal_one_minus: constant term must be zero");
  const std::size_t nt = a.t_order();
  const std::size_t nu = a.u_order();
  BivarTruncSeries b(nt, nu, a.convention());
  // b = 1 + a b, solved in (n, g) lexicographic order; a(0,0) = 0 keeps the
  // right-hand side strictly earlier in that order.
  for (std::size_t n = 0; n <= nt; ++n) {
    for (std::size_t g = 0; g <= nu; ++g) {
      Rational acc = (n == 0 && g == 0) ? 1 : 0;
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= g; ++j) {
          if (i == 0 && j == 0) continue;
          const Rational& x = a.at(i, j);
          if (sgn(x) == 0) continue;
          const Rational& y = b.at(n - i, g - j);
          if (sgn(y) == 0) continue;
          acc += x * y;
        }
      }
      b.set(n, g, std::move(acc));
    }
  }
  return b;
}

BivarTruncSeries seq_plus(const BivarTruncSeries& a) {
  if (sgn(a.at(0, 0)) != 0) throw DomainError("seq_plus: series must vanish at (0, 0)");
  return mul(a, reciprocal_one_minus(a));
}

BivarTruncSeries bivar_solve_fixed_point(const BivarSeriesMap& f, std::size_t t_order,
                                         std::size_t u_order, Convention conv,
                                         FixedPointStats* stats) {
  BivarTruncSeries x(0, u_order, conv);
  std::size_t evaluations = 0;
  while (evaluations < t_order + 2) {
    const std::size_t w = std::min(evaluations, t_order);
    const BivarTruncSeries input = x.with_orders(w, u_order);
    BivarTruncSeries y = f(input);
    ++evaluations;
    if (y.t_order() < w || y.u_order() < u_order)
      throw ContractViolation("bivar_solve_fixed_point: map lowered the truncation order");
    if (y.convention() != conv) throw UsageError("bivar_solve_fixed_point: map changed convention");
    y = y.with_orders(w, u_order);
    if (w == t_order && y == input) {
      if (stats) stats->evaluations = evaluations;
      return y;
    }
    x = std::move(y);
  }
  throw ContractViolation("bivar_solve_fixed_point: no fixed point after " +
                          std::to_string(t_order + 2) + " iterations; the map is not a contraction");
}

}  // namespace galleon
