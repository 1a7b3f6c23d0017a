// galleon: command-line access to the galled-tree counts.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource
// bound exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "galleon/asymptotics.hpp"
#include "galleon/errors.hpp"
#include "galleon/labeled.hpp"
#include "galleon/shapes.hpp"
#include "galleon/table_format.hpp"
#include "galleon/unlabeled.hpp"
#include "galleon/verify.hpp"

namespace {

using namespace galleon;
using nlohmann::json;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

constexpr int kMaxCountN = 200;
constexpr int kMaxCountAllN = 60;
constexpr int kMaxCountG = 20;
constexpr int kMaxTableN = 30;
constexpr int kMaxSeriesOrder = 400;
constexpr int kMaxBivariateOrder = 60;
constexpr int kMaxVerifyN = 40;
constexpr int kOracleDefaultN = 8;

void require_at_most(int value, int bound, const std::string& what) {
  if (value > bound)
    throw ResourceError(what + " = " + std::to_string(value) + " exceeds the bound " + std::to_string(bound));
}

// ---- count ------------------------------------------------------------------

struct Record {
  int n;
  std::optional<int> g;  // nullopt: summed over every gall count
  Integer value;
  std::string method;
  Kind kind;
};

Integer from_series(const Rational& q, Kind kind, int n) {
  const Rational v = kind == Kind::labeled ? q * Rational(factorial(static_cast<unsigned>(n))) : q;
  if (!is_integral(v)) throw ConsistencyError("non-integral coefficient");
  return v.get_num();
}

Integer by_recursion(Kind kind, int n, std::optional<int> g) {
  const int gg = g ? *g : max_galls(n);
  const CountTable t = kind == Kind::unlabeled ? unlabeled::recursion_table(n, gg) : labeled::recursion_table(n, gg);
  return g ? t.at(n, *g) : t.row_total(n);
}

Integer by_gf(Kind kind, int n, std::optional<int> g) {
  const auto order = static_cast<std::size_t>(n);
  if (!g) {
    const TruncSeries a = kind == Kind::unlabeled ? unlabeled::a_series(order) : labeled::a_series(order);
    return from_series(a[order], kind, n);
  }
  const auto uo = static_cast<std::size_t>(*g);
  const BivarTruncSeries b = kind == Kind::unlabeled ? unlabeled::bivariate(order, uo) : labeled::bivariate(order, uo);
  return from_series(b.at(order, uo), kind, n);
}

Integer by_direct(Kind kind, int n, std::optional<int> g) {
  const auto order = static_cast<std::size_t>(n);
  const int gg = g ? *g : max_galls(n);
  const auto e = kind == Kind::unlabeled ? unlabeled::eg_series_direct_all(gg, order)
                                         : labeled::eg_series_direct_all(gg, order);
  if (g) return from_series(e[static_cast<std::size_t>(*g)][order], kind, n);
  Integer sum = 0;
  for (const auto& s : e) sum += from_series(s[order], kind, n);
  return sum;
}

Integer by_oracle(Kind kind, int n, std::optional<int> g) {
  const ShapeStats s = shape_stats(n);
  const auto& v = kind == Kind::unlabeled ? s.unlabeled : s.labeled;
  if (!g) {
    Integer sum = 0;
    for (const auto& x : v) sum += x;
    return sum;
  }
  return *g < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(*g)] : Integer(0);
}

std::optional<Integer> by_closed_form(Kind kind, int n, std::optional<int> g) {
  if (!g || *g > 2) return std::nullopt;
  if (kind == Kind::labeled && *g == 0) return labeled::count_trees(n);
  if (kind == Kind::labeled && *g == 1 && n >= 3) return labeled::one_gall_closed_form(n);
  if (*g == 0) return std::nullopt;
  const auto order = static_cast<std::size_t>(n);
  TruncSeries s;
  if (kind == Kind::unlabeled) {
    const auto u = unlabeled::u_series(order);
    const auto e1 = unlabeled::e1_series(u);
    s = *g == 1 ? e1 : unlabeled::e2_series(u, e1);
  } else {
    const auto u = labeled::u_closed_form(order);
    const auto e1 = labeled::e1_series(u);
    s = *g == 1 ? e1 : labeled::e2_series(u, e1);
  }
  return from_series(s[order], kind, n);
}

std::string g_text(std::optional<int> g) { return g ? std::to_string(*g) : "all"; }

struct AsymLine {
  std::string value;
  std::string formula;
  std::string constants;
};

AsymLine asym_line(Kind kind, int n, int g, bool quoted) {
  if (kind == Kind::unlabeled) {
    const AsymptoticParams p = quoted ? AsymptoticParams::quoted() : AsymptoticParams::estimated();
    return {format_real(asym_unlabeled(n, g, p)), asym_unlabeled_formula(g),
            to_string(p.source) + " gamma=" + format_real(p.gamma) + " rho=" + format_real(p.rho)};
  }
  return {format_real(asym_labeled(n, g)), asym_labeled_formula(g), "exact (gamma=1, rho=1/2)"};
}

int cmd_count(Kind kind, int n, std::optional<int> g, const std::string& method, const std::string& format,
              bool asym, bool quoted) {
  if (n < 1) throw DomainError("count: n must be at least 1");
  if (g && *g < 0) throw DomainError("count: g must be nonnegative");
  require_at_most(n, g ? kMaxCountN : kMaxCountAllN, "n");
  if (g) require_at_most(*g, kMaxCountG, "g");
  if (asym && !g) throw UsageError("--asym needs a fixed --g");

  std::vector<Record> records;
  auto add = [&](const std::string& m, Integer v) { records.push_back({n, g, std::move(v), m, kind}); };
  const bool all = method == "all";
  if (all || method == "recursion") add("recursion", by_recursion(kind, n, g));
  if (all || method == "gf") add("gf", by_gf(kind, n, g));
  if (all || method == "direct") add("direct", by_direct(kind, n, g));
  if (method == "oracle" || (all && n <= kOracleDefaultN)) add("oracle", by_oracle(kind, n, g));
  if (all || method == "closed-form") {
    if (auto v = by_closed_form(kind, n, g)) add("closed-form", std::move(*v));
    else if (!all) throw UsageError("no closed form for this (kind, g)");
  }

  bool agree = true;
  for (const auto& r : records) agree = agree && r.value == records.front().value;
  if (!agree) {
    std::cerr << "count: methods disagree for kind=" << to_string(kind) << " n=" << n << " g=" << g_text(g) << '\n';
    for (const auto& r : records) std::cerr << "  " << r.method << ": " << r.value << '\n';
  }

  std::optional<AsymLine> al;
  if (asym) al = asym_line(kind, n, *g, quoted);

  if (format == "text") {
    if (agree) std::cout << records.front().value << '\n';
    if (al) std::cout << "asymptotic " << al->value << "  " << al->formula << "  [" << al->constants << "]\n";
  } else if (format == "csv") {
    if (al) throw UsageError("--asym is not available with --format csv");
    std::cout << "n,g,value,method,kind\n";
    for (const auto& r : records)
      std::cout << r.n << ',' << g_text(r.g) << ',' << r.value << ',' << r.method << ',' << to_string(r.kind) << '\n';
  } else {
    json out = json::array();
    for (const auto& r : records)
      out.push_back({{"n", r.n},
                     {"g", r.g ? json(*r.g) : json("all")},
                     {"value", r.value.get_str()},
                     {"method", r.method},
                     {"kind", to_string(r.kind)}});
    if (al) {
      json doc = {{"records", out},
                  {"asymptotic", {{"value", al->value}, {"formula", al->formula}, {"constants", al->constants}}}};
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << out.dump(2) << '\n';
    }
  }
  return agree ? kOk : kMismatch;
}

// ---- table ------------------------------------------------------------------

int cmd_table(Kind kind, int max_n, int max_g, const std::string& format) {
  if (max_n < 1) throw DomainError("table: max-n must be at least 1");
  if (max_g < 0) throw DomainError("table: max-g must be nonnegative");
  require_at_most(max_n, kMaxTableN, "max-n");
  const int full_g = std::max(max_g, max_galls(max_n));
  const CountTable t =
      kind == Kind::unlabeled ? unlabeled::recursion_table(max_n, full_g) : labeled::recursion_table(max_n, full_g);
  std::cout << format_table(t, max_g, parse_table_format(format));
  return kOk;
}

// ---- series -----------------------------------------------------------------

int cmd_series(const std::string& cls, Kind kind, int order, std::optional<int> max_g) {
  if (order < 0) throw DomainError("series: order must be nonnegative");
  const auto o = static_cast<std::size_t>(order);
  auto emit = [&](const TruncSeries& s) {
    for (const auto& z : to_counts(s)) std::cout << z << '\n';
  };
  if (cls == "G") {
    require_at_most(order, kMaxBivariateOrder, "order");
    const int ug = max_g ? *max_g : max_galls(std::max(order, 1));
    if (ug < 0) throw DomainError("series: max-g must be nonnegative");
    const auto uo = static_cast<std::size_t>(ug);
    const BivarTruncSeries b = kind == Kind::unlabeled ? unlabeled::bivariate(o, uo) : labeled::bivariate(o, uo);
    for (std::size_t n = 0; n <= o; ++n)
      for (std::size_t g = 0; g <= uo; ++g)
        std::cout << n << ',' << g << ',' << from_series(b.at(n, g), kind, static_cast<int>(n)) << '\n';
    return kOk;
  }
  require_at_most(order, kMaxSeriesOrder, "order");
  if (cls.rfind("Eg:", 0) == 0) {
    int g = -1;
    try {
      std::size_t used = 0;
      g = std::stoi(cls.substr(3), &used);
      if (used != cls.size() - 3) g = -1;
    } catch (const std::exception&) {
      g = -1;
    }
    if (g < 0) throw UsageError("series class 'Eg:<g>' needs a nonnegative integer g");
    require_at_most(g, kMaxCountG, "g");
    const auto e = kind == Kind::unlabeled ? unlabeled::eg_series_direct_all(g, o) : labeled::eg_series_direct_all(g, o);
    emit(e[static_cast<std::size_t>(g)]);
    return kOk;
  }
  const SeriesClass c = parse_series_class(cls);
  emit(kind == Kind::unlabeled ? unlabeled::gf(c, o) : labeled::gf(c, o));
  return kOk;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(int max_n, int max_g, int oracle_max_n, int fault) {
  require_at_most(max_n, kMaxVerifyN, "max-n");
  require_at_most(oracle_max_n, kMaxShapeLeaves, "oracle-max-n");
  VerifyOptions opts;
  opts.max_n = max_n;
  opts.max_g = max_g;
  opts.oracle_max_n = oracle_max_n;
  opts.recursion.position_factor_offset = fault;
  const VerifyReport report = run_verify(opts);
  std::cout << format_report(report);
  return report.all_passed() ? kOk : kMismatch;
}

// ---- enumerate --------------------------------------------------------------

int cmd_enumerate(int n, std::optional<int> g, bool annotate) {
  for (const auto& s : generate_unlabeled(n)) {
    if (g && s.gall_count() != *g) continue;
    std::cout << s.serialize();
    if (annotate) std::cout << '\t' << s.gall_count() << '\t' << s.automorphism_size();
    std::cout << '\n';
  }
  return kOk;
}

// ---- asym -------------------------------------------------------------------

int cmd_asym(Kind kind, int n, int g) {
  if (n < 1) throw DomainError("asym: n must be at least 1");
  if (g < 0) throw DomainError("asym: g must be nonnegative");
  if (kind == Kind::unlabeled) {
    for (bool quoted : {false, true}) {
      const AsymLine l = asym_line(kind, n, g, quoted);
      std::cout << l.value << "  " << l.formula << "  [" << l.constants << "]\n";
    }
  } else {
    const AsymLine l = asym_line(kind, n, g, false);
    std::cout << l.value << "  " << l.formula << "\n";
    std::cout << format_real(asym_labeled_stirling(n, g)) << "  2^" << 2 * g - 1 << "*sqrt(2)/" << 2 * g
              << "! * (2/e)^n * n^(n+" << 2 * g - 1 << ")  [Stirling form]\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of time-consistent galled trees"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds{"unlabeled", "labeled"};
  std::string kind_text = "unlabeled";
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", kind_text, "unlabeled or labeled")->check(CLI::IsMember(kinds));
  };

  int n = 0, max_n = 10, max_g = 4, order = 10, oracle_max_n = kOracleDefaultN, fault = 0, g_value = 0;
  std::string method = "all", format_text = "text", table_format = "csv", cls, constants = "estimated";
  bool asym = false, annotate = false;

  auto* count = app.add_subcommand("count", "count trees with n leaves and g galls");
  add_kind(count);
  count->add_option("--n", n, "number of leaves")->required();
  auto* count_g = count->add_option("--g", g_value, "number of galls (default: all)");
  count->add_option("--method", method, "counting route")
      ->check(CLI::IsMember({"recursion", "gf", "direct", "oracle", "closed-form", "all"}));
  count->add_option("--format", format_text, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  count->add_flag("--asym", asym, "also print the leading-order asymptotic");
  count->add_option("--constants", constants, "constants for --asym")->check(CLI::IsMember({"estimated", "quoted"}));

  auto* table = app.add_subcommand("table", "count table over n and g");
  add_kind(table);
  table->add_option("--max-n", max_n, "largest leaf count");
  table->add_option("--max-g", max_g, "largest gall count shown");
  table->add_option("--format", table_format, "csv, json or md")->check(CLI::IsMember({"csv", "json", "md"}));

  int series_max_g = -1;
  auto* series = app.add_subcommand("series", "generating-function coefficients, one per line");
  add_kind(series);
  series->add_option("--class", cls, "U, E1, E2, A, Eg:<g> or G")->required();
  series->add_option("--order", order, "truncation order");
  auto* series_g = series->add_option("--max-g", series_max_g, "gall bound for class G");

  auto* verify = app.add_subcommand("verify", "cross-check every counting route");
  int verify_max_n = 25, verify_max_g = 5;
  verify->add_option("--max-n", verify_max_n, "largest leaf count");
  verify->add_option("--max-g", verify_max_g, "largest gall count");
  verify->add_option("--oracle-max-n", oracle_max_n, "largest n for exhaustive shape generation");
  verify->add_option("--inject-fault", fault, "perturb the recursion's (k - 2) factor")->group("");

  auto* enumerate = app.add_subcommand("enumerate", "list canonical shapes");
  enumerate->add_option("--n", n, "number of leaves")->required();
  auto* enum_g = enumerate->add_option("--g", g_value, "only shapes with this many galls");
  enumerate->add_flag("--annotate", annotate, "append gall count and automorphism size");

  auto* asym_cmd = app.add_subcommand("asym", "leading-order asymptotic");
  add_kind(asym_cmd);
  asym_cmd->add_option("--n", n, "number of leaves")->required();
  asym_cmd->add_option("--g", g_value, "number of galls")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Kind kind = parse_kind(kind_text);
    const auto opt_g = [&](CLI::Option* o) { return o->count() ? std::optional<int>(g_value) : std::nullopt; };
    if (*count) return cmd_count(kind, n, opt_g(count_g), method, format_text, asym, constants == "quoted");
    if (*table) return cmd_table(kind, max_n, max_g, table_format);
    if (*series)
      return cmd_series(cls, kind, order, series_g->count() ? std::optional<int>(series_max_g) : std::nullopt);
    if (*verify) return cmd_verify(verify_max_n, verify_max_g, oracle_max_n, fault);
    if (*enumerate) return cmd_enumerate(n, opt_g(enum_g), annotate);
    if (*asym_cmd) return cmd_asym(kind, n, g_value);
  } catch (const ResourceError& e) {
    std::cerr << "galleon: " << e.what() << '\n';
    return kResource;
  } catch (const UsageError& e) {
    std::cerr << "galleon: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "galleon: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "galleon: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "galleon: internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
