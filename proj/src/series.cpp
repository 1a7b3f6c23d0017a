#include "galleon/series.hpp"

#include <algorithm>
#include <utility>

#include "galleon/errors.hpp"
#include "galleon/kernels.hpp"

namespace galleon {

std::string to_string(Convention c) { return c == Convention::ogf ? "ogf" : "egf"; }

namespace {

void require_same_convention(const TruncSeries& a, const TruncSeries& b, const char* op) {
  if (a.convention() != b.convention())
    throw UsageError(std::string(op) + ": mixing ogf and egf series");
}

// Integer numerators over a common denominator.
std::vector<Integer> scaled_numerators(std::span<const Rational> q, const Integer& den) {
  std::vector<Integer> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) == 0) continue;
    if (q[i].get_den() == den) {
      out[i] = q[i].get_num();
    } else {
      Integer f;
      mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), q[i].get_den_mpz_t());
      out[i] = q[i].get_num() * f;
    }
  }
  return out;
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order, Convention conv) : coeffs_(order + 1), conv_(conv) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, Convention conv)
    : coeffs_(std::move(coeffs)), conv_(conv) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

TruncSeries TruncSeries::constant(const Rational& c, std::size_t order, Convention conv) {
  return monomial(c, 0, order, conv);
}

TruncSeries TruncSeries::variable(std::size_t order, Convention conv) {
  return monomial(1, 1, order, conv);
}

TruncSeries TruncSeries::monomial(const Rational& c, std::size_t power, std::size_t order,
                                  Convention conv) {
  TruncSeries s(order, conv);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

Rational TruncSeries::coefficient(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : Rational(0);
}

void TruncSeries::set(std::size_t n, Rational value) {
  if (n > order()) throw UsageError("TruncSeries::set: index past truncation order");
  coeffs_[n] = std::move(value);
}

TruncSeries TruncSeries::with_order(std::size_t order) const {
  TruncSeries s(order, conv_);
  const std::size_t m = std::min(order, this->order());
  std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(m + 1), s.coeffs_.begin());
  return s;
}

std::size_t TruncSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (sgn(coeffs_[n]) != 0) return n;
  return coeffs_.size();
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& b) {
  require_same_convention(*this, b, "operator+");
  if (b.order() < order()) coeffs_.resize(b.order() + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += b.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& b) {
  require_same_convention(*this, b, "operator-");
  if (b.order() < order()) coeffs_.resize(b.order() + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= b.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_convention(a, b, "mul");
  const std::size_t order = std::min(a.order(), b.order());
  const auto ac = a.coefficients().first(order + 1);
  const auto bc = b.coefficients().first(order + 1);
  const Integer da = common_denominator(ac);
  const Integer db = common_denominator(bc);
  const auto an = scaled_numerators(ac, da);
  const auto bn = scaled_numerators(bc, db);
  auto prod = kernels::convolve(an, bn, order);
  const Integer den = da * db;
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (sgn(prod[n]) == 0) continue;
    if (den == 1) {
      out[n] = Rational(prod[n]);
    } else {
      out[n] = Rational(prod[n], den);
      out[n].canonicalize();
    }
  }
  return TruncSeries(std::move(out), a.convention());
}

TruncSeries pow(const TruncSeries& a, unsigned k) {
  TruncSeries result = TruncSeries::constant(1, a.order(), a.convention());
  TruncSeries base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

TruncSeries substitute_square(const TruncSeries& a) {
  TruncSeries s(a.order(), a.convention());
  for (std::size_t k = 0; 2 * k <= a.order(); ++k) s.set(2 * k, a[k]);
  return s;
}

TruncSeries mset2(const TruncSeries& a) {
  if (a.convention() != Convention::ogf)
    throw UsageError("mset2: unordered pairs with repetition need an ogf series; use set2");
  TruncSeries s = mul(a, a) + substitute_square(a);
  return s *= Rational(1, 2);
}

TruncSeries set2(const TruncSeries& a) {
  if (a.convention() != Convention::egf)
    throw UsageError("set2: labeled unordered pairs need an egf series; use mset2");
  return mul(a, a) * Rational(1, 2);
}

TruncSeries reciprocal_one_minus(const TruncSeries& a) {
  if (sgn(a[0]) != 0) throw DomainError("reciprocal_one_minus: constant term must be zero");
  const std::size_t order = a.order();
  const auto ac = a.coefficients();
  const Integer den = common_denominator(ac);
  std::vector<Rational> out(order + 1);
  if (den == 1) {
    // b_n = sum_{i=1..n} a_i b_{n-i}
    std::vector<Integer> b(order + 1);
    b[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
      for (std::size_t i = 1; i <= n; ++i) {
        if (sgn(ac[i]) == 0) continue;
        mpz_addmul(b[n].get_mpz_t(), ac[i].get_num_mpz_t(), b[n - i].get_mpz_t());
      }
    }
    for (std::size_t n = 0; n <= order; ++n) out[n] = Rational(b[n]);
  } else {
    out[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
      Rational acc = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        if (sgn(ac[i]) == 0) continue;
        acc += ac[i] * out[n - i];
      }
      out[n] = std::move(acc);
    }
  }
  return TruncSeries(std::move(out), a.convention());
}

TruncSeries seq_plus(const TruncSeries& a) {
  if (sgn(a[0]) != 0) throw DomainError("seq_plus: series must have zero constant term");
  return mul(a, reciprocal_one_minus(a));
}

std::vector<Integer> ogf_to_counts(const TruncSeries& a) {
  std::vector<Integer> out(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (!is_integral(a[n]))
      throw ConsistencyError("ogf coefficient " + std::to_string(n) + " is not an integer: " +
                             to_decimal(a[n]));
    out[n] = a[n].get_num();
  }
  return out;
}

std::vector<Integer> egf_to_counts(const TruncSeries& a) {
  if (a.convention() != Convention::egf) throw UsageError("egf_to_counts: series is not an egf");
  std::vector<Integer> out(a.order() + 1);
  Integer fact = 1;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    Rational scaled = a[n] * fact;
    if (!is_integral(scaled))
      throw ConsistencyError("egf coefficient " + std::to_string(n) + " times n! is not an integer: " +
                             to_decimal(scaled));
    out[n] = scaled.get_num();
  }
  return out;
}

std::vector<Integer> to_counts(const TruncSeries& a) {
  return a.convention() == Convention::egf ? egf_to_counts(a) : ogf_to_counts(a);
}

TruncSeries solve_fixed_point(const SeriesMap& f, std::size_t order, Convention conv,
                              FixedPointStats* stats) {
  TruncSeries x(0, conv);
  std::size_t evaluations = 0;
  while (evaluations < order + 2) {
    const std::size_t w = std::min(evaluations, order);
    const TruncSeries input = x.with_order(w);
    TruncSeries y = f(input);
    ++evaluations;
    if (y.order() < w) throw ContractViolation("solve_fixed_point: map lowered the truncation order");
    if (y.convention() != conv) throw UsageError("solve_fixed_point: map changed convention");
    y = y.with_order(w);
    if (w == order && y == input) {
      if (stats) stats->evaluations = evaluations;
      return y;
    }
    x = std::move(y);
  }
  throw ContractViolation("solve_fixed_point: no fixed point after " + std::to_string(order + 2) +
                          " iterations; the map is not a contraction");
}

}  // namespace galleon
