#include "galleon/table_format.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "galleon/errors.hpp"

namespace galleon {

namespace {

using nlohmann::json;

// Integers above 2^53 lose precision as JSON numbers; those go out as strings.
json json_integer(const Integer& z) {
  static const Integer limit = Integer(1) << 53;
  if (abs(z) <= limit) return json(z.get_si());
  return json(z.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string in table JSON");
    return z;
  }
  throw ParseError("table JSON: expected an integer");
}

Integer integer_from_text(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("bad integer '" + s + "' in table");
  return z;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

// Collects the CountTable and total for each parsed row, checking shape.
class TableBuilder {
 public:
  TableBuilder(Kind kind, int columns) : parsed_{CountTable(kind, columns - 1), {}} {}

  void add(int n, Integer total, std::vector<Integer> cells) {
    if (n != parsed_.table.max_n() + 1) throw ParseError("table rows out of order at n = " + std::to_string(n));
    if (static_cast<int>(cells.size()) != parsed_.table.max_g() + 1)
      throw ParseError("table row " + std::to_string(n) + " has the wrong number of cells");
    parsed_.table.append_row(std::move(cells));
    parsed_.totals.push_back(std::move(total));
  }

  ParsedTable take() { return std::move(parsed_); }

 private:
  ParsedTable parsed_;
};

}  // namespace

TableFormat parse_table_format(const std::string& s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  if (s == "md") return TableFormat::md;
  throw UsageError("unknown table format '" + s + "' (expected csv, json or md)");
}

CountTable clip(const CountTable& t, int max_g) {
  CountTable out(t.kind(), max_g);
  for (int n = 1; n <= t.max_n(); ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(max_g + 1), 0);
    for (int g = 0; g <= std::min(max_g, t.max_g()); ++g) row[static_cast<std::size_t>(g)] = t.at(n, g);
    out.append_row(std::move(row));
  }
  return out;
}

int shown_gall_columns(int max_n, int max_g) { return std::min(max_g, max_galls(max_n)) + 1; }

std::string format_table(const CountTable& full, int max_g, TableFormat format) {
  const int max_n = full.max_n();
  if (max_n < 1) throw UsageError("format_table: empty table");
  const int cols = shown_gall_columns(max_n, max_g);
  if (cols > full.max_g() + 1) throw UsageError("format_table: table lacks the requested columns");
  std::vector<Integer> totals;
  for (int n = 1; n <= max_n; ++n) {
    if (!full.covers_all_galls(n)) throw UsageError("format_table: totals need every gall count");
    totals.push_back(full.row_total(n));
  }

  std::ostringstream out;
  switch (format) {
    case TableFormat::csv: {
      out << "n,total";
      for (int g = 0; g < cols; ++g) out << ",g" << g;
      out << '\n';
      for (int n = 1; n <= max_n; ++n) {
        out << n << ',' << totals[static_cast<std::size_t>(n - 1)];
        for (int g = 0; g < cols; ++g) out << ',' << full.at(n, g);
        out << '\n';
      }
      break;
    }
    case TableFormat::json: {
      json rows = json::array();
      for (int n = 1; n <= max_n; ++n) {
        json cells = json::array();
        for (int g = 0; g < cols; ++g) cells.push_back(json_integer(full.at(n, g)));
        rows.push_back({{"n", n}, {"total", json_integer(totals[static_cast<std::size_t>(n - 1)])},
                        {"cells", cells}});
      }
      json doc = {{"kind", to_string(full.kind())}, {"max_n", max_n}, {"max_g", cols - 1}, {"rows", rows}};
      out << doc.dump(2) << '\n';
      break;
    }
    case TableFormat::md: {
      std::vector<std::vector<std::string>> grid;
      std::vector<std::string> header{"n", "total"};
      for (int g = 0; g < cols; ++g) header.push_back("g=" + std::to_string(g));
      grid.push_back(header);
      for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> line{std::to_string(n), totals[static_cast<std::size_t>(n - 1)].get_str()};
        for (int g = 0; g < cols; ++g)
          line.push_back(g > max_galls(n) ? "-" : full.at(n, g).get_str());
        grid.push_back(std::move(line));
      }
      std::vector<std::size_t> width(header.size(), 0);
      for (const auto& line : grid)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
      auto emit = [&](const std::vector<std::string>& line) {
        out << '|';
        for (std::size_t c = 0; c < line.size(); ++c)
          out << ' ' << std::string(width[c] - line[c].size(), ' ') << line[c] << " |";
        out << '\n';
      };
      emit(grid[0]);
      out << '|';
      for (std::size_t c = 0; c < width.size(); ++c) out << std::string(width[c] + 1, '-') << ":|";
      out << '\n';
      for (std::size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
      break;
    }
  }
  return out.str();
}

ParsedTable parse_table_csv(const std::string& text, Kind kind) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("table CSV: missing header");
  const auto header = split(line, ',');
  if (header.size() < 3 || header[0] != "n" || header[1] != "total")
    throw ParseError("table CSV: unexpected header '" + line + "'");
  for (std::size_t c = 2; c < header.size(); ++c)
    if (header[c] != "g" + std::to_string(c - 2)) throw ParseError("table CSV: bad column '" + header[c] + "'");
  const int cols = static_cast<int>(header.size()) - 2;
  TableBuilder builder(kind, cols);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != header.size()) throw ParseError("table CSV: ragged row '" + line + "'");
    std::vector<Integer> cells;
    for (std::size_t c = 2; c < fields.size(); ++c) cells.push_back(integer_from_text(fields[c]));
    const Integer n = integer_from_text(fields[0]);
    if (!n.fits_sint_p()) throw ParseError("table CSV: bad n");
    builder.add(static_cast<int>(n.get_si()), integer_from_text(fields[1]), std::move(cells));
  }
  return builder.take();
}

ParsedTable parse_table_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
  try {
    const Kind kind = parse_kind(doc.at("kind").get<std::string>());
    const int max_g = doc.at("max_g").get<int>();
    if (max_g < 0) throw ParseError("table JSON: negative max_g");
    TableBuilder builder(kind, max_g + 1);
    for (const auto& row : doc.at("rows")) {
      std::vector<Integer> cells;
      for (const auto& c : row.at("cells")) cells.push_back(integer_from_json(c));
      builder.add(row.at("n").get<int>(), integer_from_json(row.at("total")), std::move(cells));
    }
    return builder.take();
  } catch (const json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
}

}  // namespace galleon
