#pragma once

// Golden count tables for n <= 10, g <= 4, transcribed cell by cell from the
// published tables, together with their printed totals columns.

#include <vector>

#include "galleon/bigint.hpp"
#include "galleon/count_table.hpp"

namespace galleon::golden {

inline constexpr int kMaxN = 10;
inline constexpr int kMaxG = 4;

// Published cells; structural zeros (printed as "-") are stored as 0.
const CountTable& table(Kind kind);

// Printed "total number of trees" column, n = 1..10.
const std::vector<Integer>& printed_totals(Kind kind);

}  // namespace galleon::golden
