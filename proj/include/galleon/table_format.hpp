#pragma once

// Text renderings of count tables (CSV, JSON, aligned markdown) and parsers
// for the machine-readable ones.

#include <string>
#include <vector>

#include "galleon/count_table.hpp"

namespace galleon {

enum class TableFormat { csv, json, md };

TableFormat parse_table_format(const std::string& s);

// Copy restricted to gall counts 0..max_g.
CountTable clip(const CountTable& t, int max_g);

// Gall columns shown for a table on 1..max_n: min(max_g, max_galls(max_n)) + 1.
int shown_gall_columns(int max_n, int max_g);

// Renders rows 1..full.max_n() with gall columns 0..max_g (clipped to the
// support). Totals are row sums over every gall count, so `full` must cover
// max_galls(n) for every row.
std::string format_table(const CountTable& full, int max_g, TableFormat format);

struct ParsedTable {
  CountTable table;
  std::vector<Integer> totals;
};

ParsedTable parse_table_csv(const std::string& text, Kind kind);
ParsedTable parse_table_json(const std::string& text);

}  // namespace galleon
