#include "galleon/asymptotics.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <vector>

#include "galleon/errors.hpp"
#include "galleon/series.hpp"
#include "galleon/unlabeled.hpp"

namespace galleon {

namespace {

constexpr unsigned kDefaultDigits = 50;
constexpr unsigned kMinDigits = 20;
constexpr std::size_t kMinTerms = 50;
constexpr int kRichardsonOrder = 6;

unsigned& digits_slot() {
  static unsigned digits = [] {
    unsigned d = kDefaultDigits;
    if (const char* env = std::getenv("GALLEON_PRECISION")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) d = static_cast<unsigned>(v);
    }
    return d < kMinDigits ? kMinDigits : d;
  }();
  return digits;
}

void apply_precision() { Real::default_precision(digits_slot()); }

// Richardson extrapolation of s_n = s + a_1/n + a_2/n^2 + ... from the
// k + 1 samples ending at index `last`.
Real richardson(const std::vector<Real>& s, const std::vector<int>& index, std::size_t last, int k) {
  Real acc = 0;
  Real fact_i = 1;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) fact_i *= i;
    Real fact_rest = 1;
    for (int j = 2; j <= k - i; ++j) fact_rest *= j;
    const std::size_t pos = last - static_cast<std::size_t>(k - i);
    Real term = s[pos] * pow(Real(index[pos]), k) / (fact_i * fact_rest);
    if ((k - i) % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

SingularityEstimate estimate(const std::vector<Real>& c, double model_exponent) {
  if (c.size() < kMinTerms)
    throw DomainError("estimate_singularity: need at least " + std::to_string(kMinTerms) +
                      " terms, got " + std::to_string(c.size()));
  // Ratios from the tail of strictly positive coefficients.
  std::vector<Real> ratio;
  std::vector<int> ratio_n;
  for (std::size_t n = 1; n < c.size(); ++n) {
    if (c[n - 1] > 0 && c[n] > 0) {
      ratio.push_back(c[n - 1] / c[n]);
      ratio_n.push_back(static_cast<int>(n));
    }
  }
  if (ratio.size() < static_cast<std::size_t>(kRichardsonOrder + 1) || ratio_n.back() + 1 != static_cast<int>(c.size()))
    throw DomainError("estimate_singularity: coefficient tail is not positive");
  const int k = kRichardsonOrder;
  const Real rho = richardson(ratio, ratio_n, ratio.size() - 1, k);
  if (!(rho > 0 && rho < 1)) throw DomainError("estimate_singularity: radius estimate outside (0, 1)");

  // Exponent by least squares over the second half.
  const std::size_t first = c.size() / 2;
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  const Real log_rho = log(rho);
  for (std::size_t n = first; n < c.size(); ++n) {
    if (!(c[n] > 0)) continue;
    const Real x = log(Real(static_cast<long>(n)));
    const Real y = log(c[n]) + static_cast<long>(n) * log_rho;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  const Real exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);

  // Amplitude under the model exponent, extrapolated the same way.
  const Real alpha = model_exponent;
  std::vector<Real> amp;
  std::vector<int> amp_n;
  for (std::size_t n = 1; n < c.size(); ++n) {
    if (!(c[n] > 0)) continue;
    const Real nn = static_cast<long>(n);
    amp.push_back(c[n] * pow(rho, static_cast<long>(n)) * pow(nn, -alpha));
    amp_n.push_back(static_cast<int>(n));
  }
  const Real K = richardson(amp, amp_n, amp.size() - 1, k);
  const double a1 = model_exponent + 1.0;
  const bool pole = a1 <= 0 && std::floor(a1) == a1;
  const Real gamma = pole ? abs(K) : abs(K * tgamma(alpha + 1));
  return {rho, gamma, exponent, static_cast<int>(c.size())};
}

std::string g_power(const char* base, int e) {
  return e == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(e);
}

std::string half_power(int twice) {
  // n^(twice/2) written as a reduced fraction.
  if (twice % 2 == 0) return "n^" + std::to_string(twice / 2);
  return "n^(" + std::to_string(twice) + "/2)";
}

}  // namespace

unsigned working_digits() { return digits_slot(); }

void set_working_digits(unsigned digits) {
  digits_slot() = digits < kMinDigits ? kMinDigits : digits;
  apply_precision();
}

Real to_real(const Integer& z) {
  apply_precision();
  return Real(z.get_str());
}

Real to_real(const Rational& q) {
  apply_precision();
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

std::string format_real(const Real& x, int significant) { return x.str(significant); }

std::string to_string(ParamSource s) {
  return s == ParamSource::quoted ? "quoted" : "estimated";
}

AsymptoticParams AsymptoticParams::quoted() {
  apply_precision();
  return {Real("1.13000"), Real("0.4027"), ParamSource::quoted};
}

AsymptoticParams AsymptoticParams::estimated() {
  static std::once_flag once;
  static AsymptoticParams params{0, 0, ParamSource::estimated};
  std::call_once(once, [] {
    const auto counts = ogf_to_counts(unlabeled::u_series(199));
    const auto est = estimate_singularity(counts, -1.5);
    params = {est.gamma_hat, est.rho_hat, ParamSource::estimated};
  });
  apply_precision();
  return params;
}

SingularityEstimate estimate_singularity(std::span<const Integer> counts, double model_exponent) {
  apply_precision();
  std::vector<Real> c;
  c.reserve(counts.size());
  for (const auto& z : counts) c.push_back(to_real(z));
  return estimate(c, model_exponent);
}

SingularityEstimate estimate_singularity_egf(std::span<const Integer> counts,
                                             double model_exponent) {
  apply_precision();
  std::vector<Real> c;
  c.reserve(counts.size());
  Real fact = 1;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    if (n > 0) fact *= static_cast<long>(n);
    c.push_back(to_real(counts[n]) / fact);
  }
  return estimate(c, model_exponent);
}

Real asym_unlabeled(int n, int g, const AsymptoticParams& p) {
  if (n < 1) throw DomainError("asym_unlabeled: n must be at least 1");
  if (g < 0) throw DomainError("asym_unlabeled: g must be nonnegative");
  apply_precision();
  const Real pi = boost::math::constants::pi<Real>();
  const Real nn = n;
  const Real pref = to_real(Rational(pow2(static_cast<unsigned>(2 * g)),
                                     2 * factorial(static_cast<unsigned>(2 * g))));
  return pref / (pow(p.gamma, 4 * g - 1) * sqrt(pi)) * pow(nn, Real(4 * g - 3) / 2) *
         pow(p.rho, -n);
}

std::string asym_unlabeled_formula(int g) {
  if (g == 0) return "gamma/(2*sqrt(pi)) * n^(-3/2) * rho^(-n)";
  return "2^" + std::to_string(2 * g - 1) + "/(" + std::to_string(2 * g) + "! * " +
         g_power("gamma", 4 * g - 1) + " * sqrt(pi)) * " + half_power(4 * g - 3) + " * rho^(-n)";
}

Real asym_labeled(int n, int g) {
  if (n < 1) throw DomainError("asym_labeled: n must be at least 1");
  if (g < 0) throw DomainError("asym_labeled: g must be nonnegative");
  apply_precision();
  const Real pi = boost::math::constants::pi<Real>();
  const Real pref = to_real(Rational(pow2(static_cast<unsigned>(2 * g)),
                                     2 * factorial(static_cast<unsigned>(2 * g))));
  return pref / sqrt(pi) * pow(Real(n), Real(4 * g - 3) / 2) *
         to_real(Integer(pow2(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n))));
}

Real asym_labeled_stirling(int n, int g) {
  if (n < 1) throw DomainError("asym_labeled: n must be at least 1");
  if (g < 0) throw DomainError("asym_labeled: g must be nonnegative");
  apply_precision();
  const Real e = boost::math::constants::e<Real>();
  const Real pref = to_real(Rational(pow2(static_cast<unsigned>(2 * g)),
                                     2 * factorial(static_cast<unsigned>(2 * g))));
  return pref * sqrt(Real(2)) * pow(2 / e, n) * pow(Real(n), n + 2 * g - 1);
}

std::string asym_labeled_formula(int g) {
  return "2^" + std::to_string(2 * g - 1) + "/(" + std::to_string(2 * g) + "! * sqrt(pi)) * " +
         half_power(4 * g - 3) + " * 2^n * n!";
}

Rational class_ratio(int k) {
  if (k < 0) throw DomainError("class_ratio: k must be nonnegative");
  const unsigned uk = static_cast<unsigned>(k);
  const Rational r = make_rational(pow2(uk) * factorial(uk), factorial(2 * uk));
  const Rational expected(1, double_factorial(2L * k - 1));
  if (r != expected) throw ConsistencyError("class_ratio: 2^k k!/(2k)! != 1/(2k-1)!!");
  return r;
}

Rational catalan_over_power(int g) {
  if (g < 1) throw DomainError("catalan_over_power: g must be at least 1");
  return make_rational(catalan(static_cast<unsigned>(2 * g - 1)), pow2(static_cast<unsigned>(2 * g - 1)));
}

Rational double_factorial_over_factorial(int g) {
  if (g < 1) throw DomainError("double_factorial_over_factorial: g must be at least 1");
  return make_rational(double_factorial(4L * g - 3), factorial(static_cast<unsigned>(2 * g)));
}

}  // namespace galleon
