#include "galleon/reference_tables.hpp"

#include <array>

namespace galleon::golden {

namespace {

using Row = std::array<const char*, kMaxG + 1>;

constexpr std::array<Row, kMaxN> kUnlabeledCells{{
    {"1", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "0"},
    {"1", "1", "0", "0", "0"},
    {"2", "4", "0", "0", "0"},
    {"3", "15", "2", "0", "0"},
    {"6", "48", "18", "0", "0"},
    {"11", "148", "107", "6", "0"},
    {"23", "435", "528", "78", "0"},
    {"46", "1250", "2295", "661", "19"},
    {"98", "3512", "9185", "4356", "346"},
}};

constexpr std::array<Row, kMaxN> kLabeledCells{{
    {"1", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "0"},
    {"3", "3", "0", "0", "0"},
    {"15", "54", "0", "0", "0"},
    {"105", "855", "90", "0", "0"},
    {"945", "14040", "5040", "0", "0"},
    {"10395", "248535", "197820", "7560", "0"},
    {"135135", "4787370", "6917400", "869400", "0"},
    {"2027025", "100361835", "233859150", "63617400", "1247400"},
    {"34459425", "2282912100", "7927227000", "3850723800", "243243000"},
}};

// As printed, including the rows that do not equal their own cell sums.
constexpr std::array<const char*, kMaxN> kUnlabeledTotals{
    "1", "1", "2", "6", "72", "272", "1064", "4271", "17497", "72483"};

constexpr std::array<const char*, kMaxN> kLabeledTotals{
    "1", "1", "6", "69", "1050", "20025", "464310", "12709305", "401112810", "14338565325"};

CountTable build(Kind kind, const std::array<Row, kMaxN>& cells) {
  CountTable t(kind, kMaxG);
  for (const auto& row : cells) {
    std::vector<Integer> r;
    for (const char* v : row) r.emplace_back(v);
    t.append_row(std::move(r));
  }
  return t;
}

std::vector<Integer> build(const std::array<const char*, kMaxN>& totals) {
  std::vector<Integer> out;
  for (const char* v : totals) out.emplace_back(v);
  return out;
}

}  // namespace

const CountTable& table(Kind kind) {
  static const CountTable unlabeled = build(Kind::unlabeled, kUnlabeledCells);
  static const CountTable labeled = build(Kind::labeled, kLabeledCells);
  return kind == Kind::unlabeled ? unlabeled : labeled;
}

const std::vector<Integer>& printed_totals(Kind kind) {
  static const std::vector<Integer> unlabeled = build(kUnlabeledTotals);
  static const std::vector<Integer> labeled = build(kLabeledTotals);
  return kind == Kind::unlabeled ? unlabeled : labeled;
}

}  // namespace galleon::golden
