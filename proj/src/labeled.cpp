#include "galleon/labeled.hpp"

#include <utility>

#include "galleon/compositions.hpp"
#include "galleon/errors.hpp"

namespace galleon::labeled {

namespace {

constexpr Convention kEgf = Convention::egf;

Integer halve_exact(const Integer& bracket, int n, int g) {
  if (mpz_odd_p(bracket.get_mpz_t()))
    throw ConsistencyError("labeled recursion: odd bracket at (" + std::to_string(n) + ", " +
                           std::to_string(g) + ")");
  Integer half;
  mpz_divexact_ui(half.get_mpz_t(), bracket.get_mpz_t(), 2);
  return half;
}

}  // namespace

Integer count_trees(int n) {
  if (n < 1) throw DomainError("count_labeled_trees: n must be at least 1");
  return double_factorial(2L * n - 3);
}

Integer one_gall_closed_form(int n) {
  if (n < 3) throw DomainError("one-gall closed form holds for n >= 3");
  const unsigned un = static_cast<unsigned>(n);
  Integer first = (n + 2) * factorial(2 * un);
  Integer den = pow2(un) * factorial(un);
  mpz_divexact(first.get_mpz_t(), first.get_mpz_t(), den.get_mpz_t());
  return first - 3 * pow2(un - 1) * factorial(un);
}

Recursion::Recursion(RecursionOptions opts)
    : opts_(opts), table_(Kind::labeled, 0), powers_(0, true) {}

void Recursion::rebuild(int max_g) {
  const int n = table_.max_n();
  table_ = CountTable(Kind::labeled, max_g);
  powers_ = kernels::ConvolutionPowers(static_cast<std::size_t>(max_g), true);
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
        // sum_m binom(n, m) sum_l e(m, l) e(n - m, g - l)
        Integer bracket = powers_.power(2, n, g);
        if (g >= 1) {
          for (int k = 3; k <= n; ++k) {
            const Integer& p = powers_.power(k, n, static_cast<std::size_t>(g - 1));
            if (sgn(p) == 0) continue;
            bracket += (k - 2 + opts_.position_factor_offset) * p;
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
  if (max_n < 1) throw DomainError("labeled recursion: n must be at least 1");
  if (max_g < 0) throw DomainError("labeled recursion: g must be nonnegative");
  if (max_g > table_.max_g()) rebuild(max_g);
  extend(max_n);
  return table_;
}

Integer Recursion::count(int n, int g) {
  if (n < 1) throw DomainError("count_labeled: n must be at least 1");
  if (g < 0) throw DomainError("count_labeled: g must be nonnegative");
  return table(n, g).at(n, g);
}

CountTable recursion_table(int max_n, int max_g, const RecursionOptions& opts) {
  Recursion r(opts);
  return r.table(max_n, max_g);
}

CountTable recursion_table_reference(int max_n, int max_g, const RecursionOptions& opts) {
  if (max_n < 1) throw DomainError("labeled recursion: n must be at least 1");
  CountTable table(Kind::labeled, max_g);
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
      for (unsigned m = 1; m < un; ++m) {
        Integer inner = 0;
        for (int l = 0; l <= g; ++l)
          inner += table.at(static_cast<int>(m), l) * table.at(n - static_cast<int>(m), g - l);
        binary += binomial(un, m) * inner;
      }
      Integer root_gall = 0;
      if (g >= 1) {
        for (unsigned k = 3; k <= un; ++k) {
          Integer sum = 0;
          for (const auto& c : compositions(un, k)) {
            const Integer labels = multinomial(c.parts);
            for (const auto& d : compositions(static_cast<unsigned>(g) - 1 + k, k)) {
              Integer prod = labels;
              for (std::size_t i = 0; i < k && sgn(prod) != 0; ++i) prod *= cell(c[i], d[i]);
              sum += prod;
            }
          }
          root_gall += (static_cast<int>(k) - 2 + opts.position_factor_offset) * sum;
        }
      }
      row[static_cast<std::size_t>(g)] = halve_exact(binary + root_gall, n, g);
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
      [](const TruncSeries& x) { return TruncSeries::variable(x.order(), kEgf) + set2(x); }, order,
      kEgf);
}

TruncSeries u_closed_form(std::size_t order) {
  // V = sqrt(1 - 2t) from V^2 = 1 - 2t: V_0 = 1, 2 V_n = [t^n](1 - 2t) - sum_{i=1}^{n-1} V_i V_{n-i}.
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational rhs = n == 1 ? Rational(-2) : Rational(0);
    for (std::size_t i = 1; i < n; ++i) rhs -= v[i] * v[n - i];
    v[n] = rhs / 2;
  }
  TruncSeries u(order, kEgf);
  u.set(0, 1 - v[0]);
  for (std::size_t n = 1; n <= order; ++n) u.set(n, -v[n]);
  return u;
}

TruncSeries e1_series(const TruncSeries& u) {
  const TruncSeries r = reciprocal_one_minus(u);
  return pow(u, 3) * pow(r, 3) * Rational(1, 2);
}

TruncSeries e2_series(const TruncSeries& u, const TruncSeries& e1) {
  const TruncSeries r = reciprocal_one_minus(u);
  const TruncSeries uu = u * u;
  TruncSeries s = e1 * e1 * r * Rational(1, 2);
  s += e1 * uu * pow(r, 3) * Rational(1, 2);
  s += e1 * uu * pow(r, 4);
  return s;
}

TruncSeries a_series(std::size_t order) {
  return solve_fixed_point(
      [](const TruncSeries& x) {
        return TruncSeries::variable(x.order(), kEgf) + set2(x) + x * set2(seq_plus(x));
      },
      order, kEgf);
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
        auto t = BivarTruncSeries::monomial(1, 1, 0, x.t_order(), x.u_order(), kEgf);
        return t + set2(x) + times_u(x * set2(seq_plus(x)));
      },
      t_order, u_order, kEgf);
}

DirectTerms direct_terms(int g, std::span<const TruncSeries> lower) {
  if (g < 1) throw DomainError("eg_labeled_direct: g must be at least 1");
  if (lower.size() < static_cast<std::size_t>(g))
    throw UsageError("eg_labeled_direct: need E_0 .. E_{g-1}");
  const TruncSeries& u = lower[0];
  const std::size_t order = u.order();
  const Rational half(1, 2);
  DirectTerms terms{TruncSeries(order, kEgf), TruncSeries(order, kEgf)};

  for (int l = 1; l <= g - 1; ++l) terms.convolution += lower[l] * lower[g - l];
  terms.convolution *= half;

  for (const auto& w : weighted_compositions(static_cast<unsigned>(g - 1))) {
    TruncSeries prod = unlabeled::root_gall_kernel(u, w.count());
    for (unsigned m = 1; m <= w.multiplicities.size(); ++m)
      if (w.k(m) > 0) prod = prod * pow(lower[m], w.k(m));
    terms.root_gall += prod * Rational(multinomial(w.multiplicities));
  }
  terms.root_gall *= half;
  return terms;
}

std::vector<TruncSeries> eg_series_direct_all(int max_g, std::size_t order) {
  if (max_g < 0) throw DomainError("eg_labeled_direct: g must be nonnegative");
  std::vector<TruncSeries> e;
  e.push_back(u_series(order));
  const TruncSeries r = reciprocal_one_minus(e[0]);
  for (int g = 1; g <= max_g; ++g) e.push_back(direct_terms(g, e).total() * r);
  return e;
}

TruncSeries eg_series_direct(int g, std::size_t order) {
  if (g < 1) throw DomainError("eg_labeled_direct: g must be at least 1");
  return eg_series_direct_all(g, order).back();
}

}  // namespace galleon::labeled
