#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prank {

enum class AttributeKind { ordinal, categorical, continuous };

std::string_view to_string(AttributeKind kind);
AttributeKind attribute_kind_from_string(std::string_view s);

/// One column of vertex attributes. Categorical values are stored as integer
/// codes into `labels`; ordinal and continuous values are plain reals.
struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::continuous;
  std::vector<double> values;
  std::vector<std::string> labels;

  bool numeric() const noexcept { return kind != AttributeKind::categorical; }
};

/*
  Per-vertex attribute vectors, column-major. Row v holds the attributes of
  vertex v. Rows are only meaningful alongside a graph with the same n.
*/
class AttributeTable {
 public:
  AttributeTable() = default;
  explicit AttributeTable(std::size_t rows) : rows_(rows) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t columns() const noexcept { return columns_.size(); }

  const Attribute& column(std::size_t c) const { return columns_.at(c); }
  const std::vector<Attribute>& all_columns() const noexcept { return columns_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Throws std::invalid_argument when the column length does not match the
  /// row count or a value violates the column kind.
  void add_column(Attribute column);

  double value(std::size_t c, std::size_t row) const { return columns_.at(c).values.at(row); }
  const std::string& label(std::size_t c, std::size_t row) const;

  /// Indices of ordinal and continuous columns, in table order.
  std::vector<std::size_t> numeric_columns() const;

 private:
  std::size_t rows_ = 0;
  std::vector<Attribute> columns_;
};

/// CSV with a `name:kind` header cell per column and one row per vertex.
/// `expected_rows` enforces the graph's vertex count when given.
AttributeTable load_attributes(std::string_view text, std::optional<std::size_t> expected_rows = {});
AttributeTable load_attributes_file(const std::string& path, std::optional<std::size_t> expected_rows = {});

std::string save_attributes(const AttributeTable& table);
void save_attributes_file(const AttributeTable& table, const std::string& path);

}  // namespace prank
