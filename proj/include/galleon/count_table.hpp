#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "galleon/bigint.hpp"

namespace galleon {

enum class Kind { unlabeled, labeled };

std::string to_string(Kind k);
Kind parse_kind(const std::string& s);

// Largest gall count possible on n leaves: every gall needs three leaf-bearing
// subtrees, so g <= floor((n - 1) / 2).
inline int max_galls(int n) { return n >= 1 ? (n - 1) / 2 : 0; }

// Exact counts indexed by leaf count n >= 1 and gall count 0 <= g <= max_g.
// Rows are appended bottom-up in n and never modified afterwards.
class CountTable {
 public:
  CountTable(Kind kind, int max_g);

  Kind kind() const { return kind_; }
  int max_n() const { return static_cast<int>(rows_.size()); }
  int max_g() const { return max_g_; }

  // Throws DomainError for n < 1 or g < 0, UsageError past the built range.
  const Integer& at(int n, int g) const;
  const std::vector<Integer>& row(int n) const;
  // Sum over the stored gall counts; equals the full total when
  // max_g >= max_galls(n).
  Integer row_total(int n) const;
  bool covers_all_galls(int n) const { return max_g_ >= max_galls(n); }

  // Appends row max_n() + 1; the row must have max_g + 1 entries.
  void append_row(std::vector<Integer> row);

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  Kind kind_;
  int max_g_;
  std::vector<std::vector<Integer>> rows_;
};

}  // namespace galleon
