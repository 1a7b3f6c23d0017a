#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "galleon/errors.hpp"
#include "galleon/labeled.hpp"
#include "galleon/reference_tables.hpp"
#include "galleon/table_format.hpp"
#include "galleon/unlabeled.hpp"

using namespace galleon;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CountTable full_table(Kind kind, int max_n) {
  return kind == Kind::unlabeled ? unlabeled::recursion_table(max_n, max_galls(max_n))
                                 : labeled::recursion_table(max_n, max_galls(max_n));
}

}  // namespace

void check_golden_csv(Kind kind) {
  const std::string path = std::string(GALLEON_GOLDEN_DIR) + "/" + to_string(kind) + "_table.csv";
  const std::string golden_text = slurp(path);
  ASSERT_FALSE(golden_text.empty()) << path;
  EXPECT_EQ(format_table(full_table(kind, 10), 4, TableFormat::csv), golden_text);

  // The file itself is checked against the reference cells, so regenerating
  // it from a broken build cannot go unnoticed.
  const auto parsed = parse_table_csv(golden_text, kind);
  EXPECT_EQ(parsed.table, golden::table(kind));
  const auto full = full_table(kind, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(parsed.totals[static_cast<std::size_t>(n - 1)], full.row_total(n));
}

TEST(TableFormat, GoldenUnlabeledCsv) { check_golden_csv(Kind::unlabeled); }
TEST(TableFormat, GoldenLabeledCsv) { check_golden_csv(Kind::labeled); }

TEST(TableFormat, SingleRow) {
  EXPECT_EQ(format_table(full_table(Kind::unlabeled, 1), 4, TableFormat::csv), "n,total,g0\n1,1,1\n");
  EXPECT_EQ(shown_gall_columns(1, 4), 1);
  EXPECT_EQ(shown_gall_columns(30, 4), 5);
}

TEST(TableFormat, RoundTrips) {
  for (Kind kind : {Kind::unlabeled, Kind::labeled}) {
    const auto full = full_table(kind, 24);
    const auto csv = parse_table_csv(format_table(full, 6, TableFormat::csv), kind);
    const auto js = parse_table_json(format_table(full, 6, TableFormat::json));
    EXPECT_EQ(csv.table, clip(full, 6));
    EXPECT_EQ(js.table, clip(full, 6));
    EXPECT_EQ(csv.totals, js.totals);
    EXPECT_EQ(js.table.kind(), kind);
  }
}

TEST(TableFormat, LargeJsonValuesAreStrings) {
  const auto text = format_table(full_table(Kind::labeled, 20), 3, TableFormat::json);
  EXPECT_NE(text.find("\"total\": \"" + labeled::recursion_table(20, 9).row_total(20).get_str() + "\""),
            std::string::npos);
  EXPECT_NE(text.find("\"total\": 69"), std::string::npos);
}

TEST(TableFormat, MarkdownMarksStructuralZeros) {
  const auto md = format_table(full_table(Kind::unlabeled, 4), 2, TableFormat::md);
  EXPECT_NE(md.find("| n | total | g=0 | g=1 |"), std::string::npos);
  EXPECT_NE(md.find("| 2 |     1 |   1 |   - |"), std::string::npos);
}

TEST(TableFormat, Errors) {
  EXPECT_THROW(parse_table_format("xml"), UsageError);
  EXPECT_THROW(format_table(unlabeled::recursion_table(9, 2), 2, TableFormat::csv), UsageError);
  EXPECT_THROW(parse_table_csv("", Kind::labeled), ParseError);
  EXPECT_THROW(parse_table_csv("n,total,g0\n1,1\n", Kind::labeled), ParseError);
  EXPECT_THROW(parse_table_csv("n,total,g0\n2,1,1\n", Kind::labeled), ParseError);
  EXPECT_THROW(parse_table_csv("n,total,g0\n1,x,1\n", Kind::labeled), ParseError);
  EXPECT_THROW(parse_table_json("{"), ParseError);
  EXPECT_THROW(parse_table_json(R"({"kind":"tree","max_g":0,"rows":[]})"), ParseError);
  EXPECT_THROW(parse_table_json(R"({"kind":"labeled","max_g":0,"rows":[{"n":1,"total":1.5,"cells":[1]}]})"),
               ParseError);
}
