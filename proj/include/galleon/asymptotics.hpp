#pragma once

// Leading-order asymptotics for the count tables, empirical estimation of
// the singularity constants from exact coefficients, and the exact
// comparison factor against the generic network asymptotic.

#include <span>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "galleon/bigint.hpp"

namespace galleon {

using Real = boost::multiprecision::mpfr_float;

// Significant decimal digits for Real arithmetic. Defaults to 50 or the value
// of GALLEON_PRECISION (clamped to at least 20).
unsigned working_digits();
void set_working_digits(unsigned digits);

Real to_real(const Integer& z);
Real to_real(const Rational& q);
// Fixed significant digits, scientific notation when the exponent is large.
std::string format_real(const Real& x, int significant = 15);

enum class ParamSource { quoted, estimated };
std::string to_string(ParamSource s);

struct AsymptoticParams {
  Real gamma;
  Real rho;
  ParamSource source;

  // Truncated reference constants gamma = 1.13000, rho = 0.4027, stored verbatim.
  static AsymptoticParams quoted();
  // Re-estimated from 200 exact coefficients of U; cached after first use.
  static AsymptoticParams estimated();
};

struct SingularityEstimate {
  Real rho_hat;       // radius of convergence
  Real gamma_hat;     // |K * Gamma(alpha + 1)| for c_n ~ K n^alpha rho^-n
  Real exponent_hat;  // fitted subexponential power
  int order_used;     // number of coefficients consumed
};

// Ratio method on an ordinary coefficient sequence c_0, c_1, ...: consecutive
// ratios c_{n-1}/c_n are Richardson-extrapolated for rho, log c_n rho^n is
// regressed on log n over the second half for the exponent, and the
// amplitude is matched under model_exponent. Needs at least 50 terms.
SingularityEstimate estimate_singularity(std::span<const Integer> counts, double model_exponent);
// Same on labeled counts, which are divided by n! first.
SingularityEstimate estimate_singularity_egf(std::span<const Integer> counts,
                                             double model_exponent);

// E(n, g) ~ 2^{2g-1} / ((2g)! gamma^{4g-1} sqrt(pi)) n^{2g-3/2} rho^{-n}.
// g = 0 gives gamma / (2 sqrt(pi)) n^{-3/2} rho^{-n}.
Real asym_unlabeled(int n, int g, const AsymptoticParams& params);
std::string asym_unlabeled_formula(int g);

// e(n, g) ~ 2^{2g-1} / ((2g)! sqrt(pi)) n^{2g-3/2} 2^n n!.
Real asym_labeled(int n, int g);
// The Stirling form 2^{2g-1} sqrt(2) / (2g)! (2/e)^n n^{n+2g-1}.
Real asym_labeled_stirling(int n, int g);
std::string asym_labeled_formula(int g);

// 2^k k! / (2k)!, the factor by which the labeled asymptotic falls short of
// the generic network asymptotic with k reticulations. Throws
// ConsistencyError unless it equals 1 / (2k-1)!!.
Rational class_ratio(int k);

// C_{2g-1} / 2^{2g-1} and (4g-3)!! / (2g)!, which coincide for g >= 1.
Rational catalan_over_power(int g);
Rational double_factorial_over_factorial(int g);

}  // namespace galleon
