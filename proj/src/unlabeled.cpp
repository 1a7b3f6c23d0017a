#include "galleon/unlabeled.hpp"

#include <utility>

#include "galleon/compositions.hpp"
#include "galleon/errors.hpp"

namespace galleon {

SeriesClass parse_series_class(const std::string& s) {
  if (s == "U") return SeriesClass::U;
  if (s == "E1") return SeriesClass::E1;
  if (s == "E2") return SeriesClass::E2;
  if (s == "A") return SeriesClass::A;
  throw UsageError("unknown series class '" + s + "'");
}

std::string to_string(SeriesClass c) {
  switch (c) {
    case SeriesClass::U: return "U";
    case SeriesClass::E1: return "E1";
    case SeriesClass::E2: return "E2";
    case SeriesClass::A: return "A";
  }
  return "?";
}

}  // namespace galleon

namespace galleon::unlabeled {

namespace {

Integer halve_exact(const Integer& bracket, int n, int g) {
  if (mpz_odd_p(bracket.get_mpz_t()))
    throw ConsistencyError("unlabeled recursion: odd bracket at (" + std::to_string(n) + ", " +
                           std::to_string(g) + ")");
  Integer half;
  mpz_divexact_ui(half.get_mpz_t(), bracket.get_mpz_t(), 2);
  return half;
}

}  // namespace

Recursion::Recursion(RecursionOptions opts)
    : opts_(opts), table_(Kind::unlabeled, 0), powers_(0, false) {}

void Recursion::rebuild(int max_g) {
  const int n = table_.max_n();
  table_ = CountTable(Kind::unlabeled, max_g);
  powers_ = kernels::ConvolutionPowers(static_cast<std::size_t>(max_g), false);
  extend(n);
}

void Recursion::extend(int max_n) {
  const int G = table_.max_g();
  while (table_.max_n() < max_n) {
    const int n = table_.max_n() + 1;
    powers_.extend_powers(opts_.exec);
    std::vector<Integer> row(static_cast<std::size_t>(G + 1));
    if (n == 1) {
      row[0] = 1;
    } else {
      for (int g = 0; g <= G; ++g) {
        // Ordered pairs of root subtrees.
        Integer bracket = powers_.power(2, n, g);
        // Pairs of identical subtrees.
        if (n % 2 == 0 && g % 2 == 0) bracket += table_.at(n / 2, g / 2);
        if (g >= 1) {
          const std::size_t h = static_cast<std::size_t>(g - 1);
          // Root gall with k subtrees; k - 2 positions for the reticulation.
          for (int k = 3; k <= n; ++k) {
            const Integer& p = powers_.power(k, n, h);
            if (sgn(p) == 0) continue;
            bracket += (k - 2 + opts_.position_factor_offset) * p;
          }
          // Root galls fixed by the mirror swap: k = 2a + 1 subtrees, the
          // middle one under the reticulation and the arms identical.
          for (int a = 1; 2 * a + 1 <= n; ++a) {
            for (int m = 1; m + 2 * a <= n; ++m) {
              if ((n - m) % 2 != 0) continue;
              const int s = (n - m) / 2;
              for (int hm = 0; hm <= g - 1; ++hm) {
                if ((g - 1 - hm) % 2 != 0) continue;
                const Integer& mid = table_.at(m, hm);
                if (sgn(mid) == 0) continue;
                const Integer& arms = powers_.power(a, s, (g - 1 - hm) / 2);
                if (sgn(arms) == 0) continue;
                mpz_addmul(bracket.get_mpz_t(), mid.get_mpz_t(), arms.get_mpz_t());
              }
            }
          }
        }
        row[static_cast<std::size_t>(g)] = halve_exact(bracket, n, g);
      }
    }
    powers_.add_base_row(row);
    table_.append_row(std::move(row));
  }
}

const CountTable& Recursion::table(int max_n, int max_g) {
  if (max_n < 1) throw DomainError("unlabeled recursion: n must be at least 1");
  if (max_g < 0) throw DomainError("unlabeled recursion: g must be nonnegative");
  if (max_g > table_.max_g()) rebuild(max_g);
  extend(max_n);
  return table_;
}

Integer Recursion::count(int n, int g) {
  if (n < 1) throw DomainError("count_unlabeled: n must be at least 1");
  if (g < 0) throw DomainError("count_unlabeled: g must be nonnegative");
  return table(n, g).at(n, g);
}

CountTable recursion_table(int max_n, int max_g, const RecursionOptions& opts) {
  Recursion r(opts);
  return r.table(max_n, max_g);
}

CountTable recursion_table_reference(int max_n, int max_g, const RecursionOptions& opts) {
  if (max_n < 1) throw DomainError("unlabeled recursion: n must be at least 1");
  CountTable table(Kind::unlabeled, max_g);
  // Cell lookup with the (c_i, d_i - 1) convention of the composition sums.
  auto cell = [&](unsigned c, unsigned d) -> Integer {
    const int g = static_cast<int>(d) - 1;
    return g <= max_g ? table.at(static_cast<int>(c), g) : Integer(0);
  };
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(max_g + 1));
    if (n == 1) {
      row[0] = 1;
      table.append_row(std::move(row));
      continue;
    }
    const unsigned un = static_cast<unsigned>(n);
    for (int g = 0; g <= max_g; ++g) {
      Integer binary = 0;
      for (const auto& c : compositions(un, 2))
        for (const auto& d : compositions(static_cast<unsigned>(g + 2), 2))
          binary += cell(c[0], d[0]) * cell(c[1], d[1]);

      Integer halving = 0;
      if (n % 2 == 0 && g % 2 == 0) halving = table.at(n / 2, g / 2);

      Integer root_gall = 0;
      Integer palindromic = 0;
      if (g >= 1) {
        for (unsigned k = 3; k <= un; ++k) {
          Integer sum = 0;
          for (const auto& c : compositions(un, k)) {
            for (const auto& d : compositions(static_cast<unsigned>(g) - 1 + k, k)) {
              Integer prod = 1;
              for (std::size_t i = 0; i < k && sgn(prod) != 0; ++i) prod *= cell(c[i], d[i]);
              sum += prod;
            }
          }
          root_gall += (static_cast<int>(k) - 2 + opts.position_factor_offset) * sum;
        }
        for (unsigned a = 1; a <= (un - 1) / 2; ++a) {
          const unsigned k = 2 * a + 1;
          for (const auto& c : palindromic_compositions(un, k)) {
            for (const auto& d : palindromic_compositions(static_cast<unsigned>(g) - 1 + k, k)) {
              Integer prod = 1;
              for (std::size_t i = 0; i <= a && sgn(prod) != 0; ++i) prod *= cell(c[i], d[i]);
              palindromic += prod;
            }
          }
        }
      }
      row[static_cast<std::size_t>(g)] = halve_exact(binary + halving + root_gall + palindromic, n, g);
    }
    table.append_row(std::move(row));
  }
  return table;
}

Integer count(int n, int g) {
  Recursion r;
  return r.count(n, g);
}

TruncSeries u_series(std::size_t order) {
  return solve_fixed_point(
      [](const TruncSeries& x) { return TruncSeries::variable(x.order(), Convention::ogf) + mset2(x); },
      order, Convention::ogf);
}

TruncSeries e1_series(const TruncSeries& u) {
  const TruncSeries u2 = substitute_square(u);
  const TruncSeries r = reciprocal_one_minus(u);
  const TruncSeries r2 = reciprocal_one_minus(u2);
  return (pow(u, 3) * pow(r, 3) + u * u2 * r * r2) * Rational(1, 2);
}

TruncSeries e2_series(const TruncSeries& u, const TruncSeries& e1) {
  const TruncSeries u2 = substitute_square(u);
  const TruncSeries r = reciprocal_one_minus(u);
  const TruncSeries r2 = reciprocal_one_minus(u2);
  const TruncSeries uu = u * u;
  TruncSeries s = r * (e1 * e1 + substitute_square(e1)) * Rational(1, 2);
  s += uu * e1 * pow(r, 3) * Rational(1, 2);
  s += u2 * e1 * r * r2 * Rational(1, 2);
  s += e1 * uu * pow(r, 4);
  return s;
}

TruncSeries a_series(std::size_t order) {
  return solve_fixed_point(
      [](const TruncSeries& x) {
        return TruncSeries::variable(x.order(), Convention::ogf) + mset2(x) + x * mset2(seq_plus(x));
      },
      order, Convention::ogf);
}

TruncSeries gf(SeriesClass cls, std::size_t order) {
  switch (cls) {
    case SeriesClass::U: return u_series(order);
    case SeriesClass::E1: return e1_series(u_series(order));
    case SeriesClass::E2: {
      const auto u = u_series(order);
      return e2_series(u, e1_series(u));
    }
    case SeriesClass::A: return a_series(order);
  }
  throw UsageError("unknown series class");
}

BivarTruncSeries bivariate(std::size_t t_order, std::size_t u_order) {
  return bivar_solve_fixed_point(
      [](const BivarTruncSeries& x) {
        auto t = BivarTruncSeries::monomial(1, 1, 0, x.t_order(), x.u_order(), Convention::ogf);
        return t + mset2(x) + times_u(x * mset2(seq_plus(x)));
      },
      t_order, u_order, Convention::ogf);
}

TruncSeries DirectTerms::total() const { return convolution + halving + root_gall + even_index + tail; }

TruncSeries root_gall_kernel(const TruncSeries& u, unsigned K) {
  const std::size_t order = u.order();
  const TruncSeries r = reciprocal_one_minus(u);
  const TruncSeries one = TruncSeries::constant(1, order, u.convention());
  if (K == 0) return pow(u, 3) * pow(r, 2);
  // (3U + K - 2) / (1 - U)^{K + 2}, plus 1 when K = 1.
  TruncSeries numer = u * Rational(3) + one * Rational(static_cast<long>(K) - 2);
  TruncSeries kernel = numer * pow(r, K + 2);
  if (K == 1) kernel += one;
  return kernel;
}

DirectTerms direct_terms(int g, std::span<const TruncSeries> lower) {
  if (g < 1) throw DomainError("eg_series_direct: g must be at least 1");
  if (lower.size() < static_cast<std::size_t>(g))
    throw UsageError("eg_series_direct: need E_0 .. E_{g-1}");
  const TruncSeries& u = lower[0];
  const std::size_t order = u.order();
  const Rational half(1, 2);

  DirectTerms terms{TruncSeries(order), TruncSeries(order), TruncSeries(order), TruncSeries(order),
                    TruncSeries(order)};

  for (int l = 1; l <= g - 1; ++l) terms.convolution += lower[l] * lower[g - l];
  terms.convolution *= half;

  if (g % 2 == 0) terms.halving = substitute_square(lower[g / 2]) * half;

  for (const auto& w : weighted_compositions(static_cast<unsigned>(g - 1))) {
    const unsigned K = w.count();
    TruncSeries prod = root_gall_kernel(u, K);
    for (unsigned m = 1; m <= w.multiplicities.size(); ++m)
      if (w.k(m) > 0) prod = prod * pow(lower[m], w.k(m));
    terms.root_gall += prod * Rational(multinomial(w.multiplicities));
  }
  terms.root_gall *= half;

  const TruncSeries u2 = substitute_square(u);
  const TruncSeries r2 = reciprocal_one_minus(u2);
  for (int b = 1; b <= (g - 1) / 2; ++b) {
    TruncSeries inner(order);
    for (const auto& w : weighted_compositions(static_cast<unsigned>(b))) {
      const unsigned R = w.count();
      TruncSeries prod = pow(r2, R + 1);
      for (unsigned m = 1; m <= w.multiplicities.size(); ++m)
        if (w.k(m) > 0) prod = prod * pow(substitute_square(lower[m]), w.k(m));
      inner += prod * Rational(multinomial(w.multiplicities));
    }
    terms.even_index += lower[g - 2 * b - 1] * inner;
  }
  terms.even_index *= half;

  terms.tail = lower[g - 1] * u2 * r2 * half;
  return terms;
}

std::vector<TruncSeries> eg_series_direct_all(int max_g, std::size_t order) {
  if (max_g < 0) throw DomainError("eg_series_direct: g must be nonnegative");
  std::vector<TruncSeries> e;
  e.push_back(u_series(order));
  const TruncSeries r = reciprocal_one_minus(e[0]);
  for (int g = 1; g <= max_g; ++g) e.push_back(direct_terms(g, e).total() * r);
  return e;
}

TruncSeries eg_series_direct(int g, std::size_t order) {
  if (g < 1) throw DomainError("eg_series_direct: g must be at least 1");
  return eg_series_direct_all(g, order).back();
}

}  // namespace galleon::unlabeled
