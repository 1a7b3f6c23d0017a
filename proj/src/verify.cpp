#include "galleon/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "galleon/errors.hpp"
#include "galleon/labeled.hpp"
#include "galleon/reference_tables.hpp"
#include "galleon/shapes.hpp"

namespace galleon {

namespace {

using CellFn = std::function<Integer(int n, int g)>;

constexpr std::size_t kMaxDiffsShown = 20;

Check make_check(Kind kind, std::string name) {
  Check c;
  c.kind = kind;
  c.name = std::move(name);
  return c;
}

// Every route to one kind of table, computed once up front.
struct Routes {
  Kind kind;
  int max_n;
  int max_g;
  CountTable recursion;  // gall columns 0..max(max_g, max_galls(max_n))
  BivarTruncSeries bivariate;
  std::vector<TruncSeries> direct;  // E_0 .. E_max_g
  std::vector<Integer> totals;      // a-series counts 0..max_n

  Routes(Kind k, int n, int g, const RecursionOptions& opts)
      : kind(k),
        max_n(n),
        max_g(g),
        recursion(k, 0),
        bivariate(static_cast<std::size_t>(n), static_cast<std::size_t>(g), Convention::ogf) {
    const int full_g = std::max(g, max_galls(n));
    const auto order = static_cast<std::size_t>(n);
    if (k == Kind::unlabeled) {
      recursion = unlabeled::recursion_table(n, full_g, opts);
      bivariate = unlabeled::bivariate(order, static_cast<std::size_t>(g));
      direct = unlabeled::eg_series_direct_all(g, order);
      totals = to_counts(unlabeled::a_series(order));
    } else {
      recursion = labeled::recursion_table(n, full_g, opts);
      bivariate = labeled::bivariate(order, static_cast<std::size_t>(g));
      direct = labeled::eg_series_direct_all(g, order);
      totals = to_counts(labeled::a_series(order));
    }
  }

  Integer scaled(const Rational& q, int n) const {
    const Rational v = kind == Kind::labeled ? q * Rational(factorial(static_cast<unsigned>(n))) : q;
    if (!is_integral(v)) throw ConsistencyError("non-integral coefficient at n = " + std::to_string(n));
    return v.get_num();
  }
};

void compare(Check& check, int max_n, int max_g, const CellFn& expected, const std::string& expected_name,
             const CellFn& actual, const std::string& actual_name) {
  for (int n = 1; n <= max_n; ++n) {
    for (int g = 0; g <= max_g; ++g) {
      ++check.cells;
      const Integer a = expected(n, g);
      const Integer b = actual(n, g);
      if (a != b) {
        std::ostringstream d;
        d << "(n=" << n << ", g=" << g << "): " << expected_name << " " << a << " vs " << actual_name << " " << b;
        check.diffs.push_back(d.str());
      }
    }
  }
}

void add_cross_checks(std::vector<Check>& checks, const Routes& r, const VerifyOptions& opts) {
  const Kind kind = r.kind;
  const CellFn rec = [&](int n, int g) { return r.recursion.at(n, g); };

  {
    Check c = make_check(kind, "recursion = bivariate GF");
    compare(c, r.max_n, r.max_g, rec, "recursion",
            [&](int n, int g) { return r.scaled(r.bivariate.at(static_cast<std::size_t>(n), static_cast<std::size_t>(g)), n); },
            "gf");
    checks.push_back(std::move(c));
  }
  {
    Check c = make_check(kind, "recursion = direct E_g series");
    compare(c, r.max_n, r.max_g, rec, "recursion",
            [&](int n, int g) { return r.scaled(r.direct[static_cast<std::size_t>(g)][static_cast<std::size_t>(n)], n); },
            "direct");
    checks.push_back(std::move(c));
  }
  {
    const int ref_n = std::min(r.max_n, opts.reference_max_n);
    const CountTable ref = kind == Kind::unlabeled
                               ? unlabeled::recursion_table_reference(ref_n, r.max_g, opts.recursion)
                               : labeled::recursion_table_reference(ref_n, r.max_g, opts.recursion);
    Check c = make_check(kind, "recursion = composition-stream reference (n <= " + std::to_string(ref_n) + ")");
    compare(c, ref_n, r.max_g, rec, "recursion", [&](int n, int g) { return ref.at(n, g); }, "reference");
    checks.push_back(std::move(c));
  }
  {
    Check c = make_check(kind, "row sums = total-count series");
    compare(c, r.max_n, 0, [&](int n, int) { return r.recursion.row_total(n); }, "row sum",
            [&](int n, int) { return r.totals[static_cast<std::size_t>(n)]; }, "series");
    checks.push_back(std::move(c));
  }
  {
    const int oracle_n = std::min({r.max_n, opts.oracle_max_n, kMaxShapeLeaves});
    std::vector<ShapeStats> stats;
    for (int n = 1; n <= oracle_n; ++n) stats.push_back(shape_stats(n));
    const std::string what = kind == Kind::unlabeled ? "shape count" : "sum of n!/|Aut|";
    Check c = make_check(kind, "recursion = oracle " + what + " (n <= " + std::to_string(oracle_n) + ")");
    compare(c, oracle_n, r.max_g, rec, "recursion",
            [&](int n, int g) {
              const auto& s = stats[static_cast<std::size_t>(n - 1)];
              const auto& v = kind == Kind::unlabeled ? s.unlabeled : s.labeled;
              return g < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(g)] : Integer(0);
            },
            "oracle");
    checks.push_back(std::move(c));
  }
  {
    const int gn = std::min(r.max_n, golden::kMaxN);
    const int gg = std::min(r.max_g, golden::kMaxG);
    const CountTable& gold = golden::table(kind);
    Check c = make_check(kind, "recursion = golden table cells");
    compare(c, gn, gg, [&](int n, int g) { return gold.at(n, g); }, "golden", rec, "recursion");
    checks.push_back(std::move(c));
  }
  {
    const int cg = std::min(r.max_g, 2);
    const auto order = static_cast<std::size_t>(r.max_n);
    std::vector<TruncSeries> closed;
    if (kind == Kind::unlabeled) {
      const auto u = unlabeled::u_series(order);
      const auto e1 = unlabeled::e1_series(u);
      closed = {u, e1, unlabeled::e2_series(u, e1)};
    } else {
      const auto u = labeled::u_closed_form(order);
      const auto e1 = labeled::e1_series(u);
      closed = {u, e1, labeled::e2_series(u, e1)};
    }
    Check c = make_check(kind, "recursion = closed-form E_0, E_1, E_2");
    compare(c, r.max_n, cg, rec, "recursion",
            [&](int n, int g) { return r.scaled(closed[static_cast<std::size_t>(g)][static_cast<std::size_t>(n)], n); },
            "closed-form");
    checks.push_back(std::move(c));
  }
  if (kind == Kind::labeled) {
    {
      Check c = make_check(kind, "U fixed point = 1 - sqrt(1 - 2t) = (2n-3)!!");
      const auto fixed = to_counts(labeled::u_series(static_cast<std::size_t>(r.max_n)));
      const auto closed = to_counts(labeled::u_closed_form(static_cast<std::size_t>(r.max_n)));
      compare(c, r.max_n, 0, [&](int n, int) { return labeled::count_trees(n); }, "(2n-3)!!",
              [&](int n, int) { return fixed[static_cast<std::size_t>(n)]; }, "fixed-point");
      compare(c, r.max_n, 0, [&](int n, int) { return labeled::count_trees(n); }, "(2n-3)!!",
              [&](int n, int) { return closed[static_cast<std::size_t>(n)]; }, "closed-form");
      checks.push_back(std::move(c));
    }
    if (r.max_g >= 1 && r.max_n >= 3) {
      Check c = make_check(kind, "recursion = one-gall closed formula (n >= 3)");
      for (int n = 3; n <= r.max_n; ++n) {
        ++c.cells;
        const Integer z = labeled::one_gall_closed_form(n);
        if (z != r.recursion.at(n, 1))
          c.diffs.push_back("(n=" + std::to_string(n) + ", g=1): formula " + z.get_str() + " vs recursion " +
                            r.recursion.at(n, 1).get_str());
      }
      checks.push_back(std::move(c));
    }
  }
  {
    Check c = make_check(kind, "support: nonzero iff g <= (n-1)/2");
    for (int n = 1; n <= r.max_n; ++n) {
      for (int g = 0; g <= r.max_g; ++g) {
        ++c.cells;
        const bool nonzero = sgn(r.recursion.at(n, g)) > 0;
        if (nonzero != (g <= max_galls(n)))
          c.diffs.push_back("(n=" + std::to_string(n) + ", g=" + std::to_string(g) + "): value " +
                            r.recursion.at(n, g).get_str());
      }
    }
    checks.push_back(std::move(c));
  }
}

void add_bound_check(std::vector<Check>& checks, const Routes& u, const Routes& l) {
  Check c = make_check(Kind::labeled, "E(n,g) <= e(n,g) <= n! E(n,g)");
  for (int n = 1; n <= std::min(u.max_n, l.max_n); ++n) {
    const Integer f = factorial(static_cast<unsigned>(n));
    for (int g = 0; g <= std::min(u.max_g, l.max_g); ++g) {
      ++c.cells;
      const Integer& a = u.recursion.at(n, g);
      const Integer& b = l.recursion.at(n, g);
      if (b < a || b > f * a)
        c.diffs.push_back("(n=" + std::to_string(n) + ", g=" + std::to_string(g) + "): unlabeled " + a.get_str() +
                          ", labeled " + b.get_str());
    }
  }
  checks.push_back(std::move(c));
}

const char* kind_label(Kind k) { return k == Kind::unlabeled ? "unlabeled" : "labeled"; }

}  // namespace

std::vector<int> TotalsReport::mismatched_rows() const {
  std::vector<int> out;
  for (const auto& r : rows)
    if (r.printed != r.row_sum) out.push_back(r.n);
  return out;
}

bool TotalsReport::row_sums_match_series() const {
  return std::all_of(rows.begin(), rows.end(), [](const TotalsRow& r) { return r.row_sum == r.a_series; });
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

TotalsReport totals_discrepancy(Kind kind, const RecursionOptions& opts) {
  const int n_max = golden::kMaxN;
  const CountTable rec = kind == Kind::unlabeled ? unlabeled::recursion_table(n_max, max_galls(n_max), opts)
                                                 : labeled::recursion_table(n_max, max_galls(n_max), opts);
  const auto order = static_cast<std::size_t>(n_max + 1);
  const auto series = kind == Kind::unlabeled ? to_counts(unlabeled::a_series(order))
                                              : to_counts(labeled::a_series(order));
  const auto& printed = golden::printed_totals(kind);
  TotalsReport report{kind, {}};
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    report.rows.push_back({n, printed[i - 1], rec.row_total(n), series[i], series[i + 1],
                           printed[i - 1] == series[i + 1]});
  }
  return report;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.max_n < 1) throw DomainError("verify: max_n must be at least 1");
  if (opts.max_g < 0) throw DomainError("verify: max_g must be nonnegative");
  VerifyReport report;
  // A broken recursion can fail its own exactness checks (an odd bracket
  // before halving); that is reported as a failed check, not an abort.
  auto build = [&](Kind kind) -> std::optional<Routes> {
    Check c = make_check(kind, "every route builds without consistency errors");
    c.cells = 1;
    std::optional<Routes> r;
    try {
      r.emplace(kind, opts.max_n, opts.max_g, opts.recursion);
    } catch (const ConsistencyError& e) {
      c.diffs.push_back(e.what());
    }
    report.checks.push_back(std::move(c));
    return r;
  };
  const auto u = build(Kind::unlabeled);
  if (u) add_cross_checks(report.checks, *u, opts);
  const auto l = build(Kind::labeled);
  if (l) add_cross_checks(report.checks, *l, opts);
  if (u && l) add_bound_check(report.checks, *u, *l);
  report.totals.push_back(totals_discrepancy(Kind::unlabeled));
  report.totals.push_back(totals_discrepancy(Kind::labeled));
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  out << "checks\n";
  for (const auto& c : report.checks) {
    out << "  " << (c.passed() ? "PASS" : "FAIL") << "  " << kind_label(c.kind)
        << std::string(std::string("unlabeled").size() - std::string(kind_label(c.kind)).size() + 2, ' ') << c.name
        << std::string(width - c.name.size() + 2, ' ') << c.cells << " cells";
    if (!c.passed()) out << ", " << c.diffs.size() << " mismatches";
    out << '\n';
    for (std::size_t i = 0; i < c.diffs.size() && i < kMaxDiffsShown; ++i) out << "        " << c.diffs[i] << '\n';
    if (c.diffs.size() > kMaxDiffsShown) out << "        ... " << c.diffs.size() - kMaxDiffsShown << " more\n";
  }

  for (const auto& t : report.totals) {
    out << "\nprinted totals column, golden " << kind_label(t.kind) << " table\n";
    out << "     n          printed          row sum         A-series  status\n";
    for (const auto& r : t.rows) {
      std::string status = r.printed == r.row_sum ? "ok" : "printed != row sum";
      if (r.printed != r.row_sum && r.next_row_match) status += " (equals A_" + std::to_string(r.n + 1) + ")";
      char line[160];
      std::snprintf(line, sizeof line, "  %4d  %15s  %15s  %15s  ", r.n, r.printed.get_str().c_str(),
                    r.row_sum.get_str().c_str(), r.a_series.get_str().c_str());
      out << line << status << '\n';
    }
    const auto bad = t.mismatched_rows();
    if (bad.empty()) {
      out << "  every printed total equals its row sum\n";
    } else {
      out << "  printed total disagrees with the row sum for n =";
      for (int n : bad) out << ' ' << n;
      out << '\n';
      std::vector<int> shifted, neither;
      for (const auto& r : t.rows) {
        if (r.printed == r.row_sum) continue;
        (r.next_row_match ? shifted : neither).push_back(r.n);
      }
      if (!shifted.empty()) {
        out << "  printed total equals the row sum of the following row (A_{n+1}) for n =";
        for (int n : shifted) out << ' ' << n;
        out << '\n';
      }
      for (int n : neither) {
        const auto& r = t.rows[static_cast<std::size_t>(n - 1)];
        out << "  printed total at n = " << n << " (" << r.printed << ") matches neither A_" << n << " = "
            << r.row_sum << " nor A_" << n + 1 << " = " << r.a_next << '\n';
      }
    }
    out << "  row sums " << (t.row_sums_match_series() ? "match" : "DO NOT match")
        << " the solved total-count series\n";
  }
  out << "\n" << (report.all_passed() ? "all checks passed" : "verification FAILED") << '\n';
  return out.str();
}

}  // namespace galleon
