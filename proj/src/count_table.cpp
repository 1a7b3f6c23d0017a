#include "galleon/count_table.hpp"

#include <utility>

#include "galleon/errors.hpp"

namespace galleon {

std::string to_string(Kind k) { return k == Kind::unlabeled ? "unlabeled" : "labeled"; }

Kind parse_kind(const std::string& s) {
  if (s == "unlabeled") return Kind::unlabeled;
  if (s == "labeled") return Kind::labeled;
  throw UsageError("unknown kind '" + s + "' (expected unlabeled or labeled)");
}

CountTable::CountTable(Kind kind, int max_g) : kind_(kind), max_g_(max_g) {
  if (max_g < 0) throw DomainError("CountTable: negative gall bound");
}

const Integer& CountTable::at(int n, int g) const {
  if (n < 1) throw DomainError("count requested for n < 1");
  if (g < 0) throw DomainError("count requested for g < 0");
  if (n > max_n() || g > max_g_)
    throw UsageError("CountTable: cell (" + std::to_string(n) + ", " + std::to_string(g) +
                     ") outside the built range");
  return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(g)];
}

const std::vector<Integer>& CountTable::row(int n) const {
  if (n < 1 || n > max_n()) throw UsageError("CountTable: row outside the built range");
  return rows_[static_cast<std::size_t>(n - 1)];
}

Integer CountTable::row_total(int n) const {
  Integer sum = 0;
  for (const auto& v : row(n)) sum += v;
  return sum;
}

void CountTable::append_row(std::vector<Integer> row) {
  if (row.size() != static_cast<std::size_t>(max_g_ + 1))
    throw UsageError("CountTable: row width does not match gall bound");
  for (const auto& v : row)
    if (sgn(v) < 0) throw ConsistencyError("CountTable: negative count");
  rows_.push_back(std::move(row));
}

}  // namespace galleon
