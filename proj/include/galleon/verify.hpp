#pragma once

// Cross-method verification: every independent route to the count tables is
// computed and compared cell by cell, plus a generated report on the printed
// totals column of the golden tables.

#include <string>
#include <vector>

#include "galleon/count_table.hpp"
#include "galleon/unlabeled.hpp"

namespace galleon {

struct VerifyOptions {
  int max_n = 25;
  int max_g = 5;
  int oracle_max_n = 8;     // exhaustive shape generation
  int reference_max_n = 9;  // literal composition-stream recursion
  // Applied to both recursions; a nonzero offset is the mutation check.
  RecursionOptions recursion;
};

struct Check {
  Kind kind;
  std::string name;
  int cells = 0;
  std::vector<std::string> diffs;

  bool passed() const { return diffs.empty(); }
};

struct TotalsRow {
  int n;
  Integer printed;
  Integer row_sum;   // recursion, summed over every gall count
  Integer a_series;  // coefficient of the solved total-count series
  Integer a_next;    // series coefficient at n + 1
  bool next_row_match;  // printed == a_next
};

struct TotalsReport {
  Kind kind;
  std::vector<TotalsRow> rows;

  std::vector<int> mismatched_rows() const;
  bool row_sums_match_series() const;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<TotalsReport> totals;

  bool all_passed() const;
};

TotalsReport totals_discrepancy(Kind kind, const RecursionOptions& opts = {});
VerifyReport run_verify(const VerifyOptions& opts);
std::string format_report(const VerifyReport& report);

}  // namespace galleon
