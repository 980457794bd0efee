#include "prank/attributes.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "prank/graph.hpp"

namespace prank {

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::ordinal: return "ordinal";
    case AttributeKind::categorical: return "categorical";
    case AttributeKind::continuous: return "continuous";
  }
  return "continuous";
}

AttributeKind attribute_kind_from_string(std::string_view s) {
  if (s == "ordinal") return AttributeKind::ordinal;
  if (s == "categorical") return AttributeKind::categorical;
  if (s == "continuous") return AttributeKind::continuous;
  throw std::invalid_argument("unknown attribute kind `" + std::string(s) + "`");
}

std::optional<std::size_t> AttributeTable::find(std::string_view name) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].name == name) return c;
  }
  return std::nullopt;
}

void AttributeTable::add_column(Attribute column) {
  if (column.values.size() != rows_) {
    throw std::invalid_argument("attribute `" + column.name + "` has " +
                                std::to_string(column.values.size()) + " values, expected " +
                                std::to_string(rows_));
  }
  for (double v : column.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("attribute `" + column.name + "` has a non-finite value");
    if (column.kind == AttributeKind::categorical &&
        (v < 0 || v != std::floor(v) || v >= static_cast<double>(column.labels.size()))) {
      throw std::invalid_argument("attribute `" + column.name + "` has an invalid label code");
    }
  }
  columns_.push_back(std::move(column));
}

const std::string& AttributeTable::label(std::size_t c, std::size_t row) const {
  const Attribute& a = columns_.at(c);
  if (a.kind != AttributeKind::categorical) {
    throw std::invalid_argument("attribute `" + a.name + "` is not categorical");
  }
  return a.labels.at(static_cast<std::size_t>(a.values.at(row)));
}

std::vector<std::size_t> AttributeTable::numeric_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].numeric()) out.push_back(c);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

AttributeTable load_attributes(std::string_view text, std::optional<std::size_t> expected_rows) {
  std::vector<std::string_view> lines;
  std::vector<std::size_t> line_numbers;
  std::size_t pos = 0, lineno = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (trim(raw).empty()) continue;
    lines.push_back(raw);
    line_numbers.push_back(lineno);
  }
  if (lines.empty()) throw ParseError(1, "attribute file has no header");

  std::vector<Attribute> cols;
  for (auto cell : split_csv(lines[0])) {
    const auto colon = cell.rfind(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_numbers[0], "header cell `" + std::string(cell) + "` is not `name:kind`");
    }
    Attribute a;
    a.name = std::string(trim(cell.substr(0, colon)));
    try {
      a.kind = attribute_kind_from_string(trim(cell.substr(colon + 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_numbers[0], e.what());
    }
    cols.push_back(std::move(a));
  }

  const std::size_t rows = lines.size() - 1;
  if (expected_rows && *expected_rows != rows) {
    throw ParseError(line_numbers.back(), "attribute table has " + std::to_string(rows) +
                                              " rows, expected " + std::to_string(*expected_rows));
  }
  std::vector<std::unordered_map<std::string, std::size_t>> dicts(cols.size());
  for (std::size_t r = 0; r < rows; ++r) {
    const auto cells = split_csv(lines[r + 1]);
    const std::size_t ln = line_numbers[r + 1];
    if (cells.size() != cols.size()) {
      throw ParseError(ln, "expected " + std::to_string(cols.size()) + " cells, found " +
                               std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Attribute& a = cols[c];
      if (a.kind == AttributeKind::categorical) {
        auto [it, inserted] = dicts[c].try_emplace(std::string(cells[c]), a.labels.size());
        if (inserted) a.labels.emplace_back(cells[c]);
        a.values.push_back(static_cast<double>(it->second));
        continue;
      }
      double v = 0;
      const auto cell = cells[c];
      auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || p != cell.data() + cell.size() || !std::isfinite(v)) {
        throw ParseError(ln, "column " + std::to_string(c + 1) + " (`" + a.name + "`): `" +
                                 std::string(cell) + "` is not a finite number");
      }
      a.values.push_back(v);
    }
  }

  AttributeTable table(rows);
  for (auto& a : cols) table.add_column(std::move(a));
  return table;
}

AttributeTable load_attributes_file(const std::string& path, std::optional<std::size_t> expected_rows) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open attribute file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_attributes(ss.str(), expected_rows);
}

std::string save_attributes(const AttributeTable& table) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t c = 0; c < table.columns(); ++c) {
    if (c) out << ',';
    out << table.column(c).name << ':' << to_string(table.column(c).kind);
  }
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns(); ++c) {
      if (c) out << ',';
      if (table.column(c).numeric()) {
        out << table.value(c, r);
      } else {
        out << table.label(c, r);
      }
    }
    out << '\n';
  }
  return out.str();
}

void save_attributes_file(const AttributeTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write attribute file: " + path);
  out << save_attributes(table);
}

}  // namespace prank
