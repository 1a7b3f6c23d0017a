#include "galleon/bigint.hpp"

#include "galleon/errors.hpp"

namespace galleon {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer double_factorial(long n) {
  if (n < -1) throw DomainError("double_factorial: argument below -1");
  if (n <= 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer multinomial(std::span<const unsigned> parts) {
  Integer r = 1;
  unsigned total = 0;
  for (unsigned p : parts) {
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

Integer catalan(unsigned n) {
  Integer r = binomial(2 * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
  return r;
}

Integer pow2(unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

Integer common_denominator(std::span<const Rational> values) {
  Integer d = 1;
  for (const auto& q : values) {
    if (q.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  }
  return d;
}

// Tolerates non-canonical input such as Rational(8, 4).
bool is_integral(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_decimal(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace galleon
