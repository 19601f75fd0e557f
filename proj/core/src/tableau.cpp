#include "tabassign/tableau.hpp"

#include <algorithm>

#include "tabassign/errors.hpp"

namespace tabassign {

namespace {

void check_rows_match_shape(const Partition& shape, const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != shape.row_count())
    throw shape_error("row count does not match shape " + shape.to_string());
  for (int j = 0; j < shape.row_count(); ++j)
    if (static_cast<int>(rows[static_cast<std::size_t>(j)].size()) != shape.parts()[static_cast<std::size_t>(j)])
      throw shape_error("row " + std::to_string(j + 1) + " length does not match shape " +
                        shape.to_string());
}

void check_bijective(const Partition& shape, const std::vector<std::vector<int>>& rows) {
  const int n = shape.n();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& row : rows) {
    for (int entry : row) {
      if (entry < 1 || entry > n)
        throw invalid_filling("entry " + std::to_string(entry) + " outside {1.." +
                              std::to_string(n) + "}");
      if (seen[static_cast<std::size_t>(entry - 1)])
        throw invalid_filling("entry " + std::to_string(entry) + " used more than once");
      seen[static_cast<std::size_t>(entry - 1)] = true;
    }
  }
}

}  // namespace

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  check_rows_match_shape(shape_, rows_);
  check_bijective(shape_, rows_);
}

std::vector<int> Tableau::flattened() const {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n()));
  for (const auto& row : rows_) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

Tabloid::Tabloid(const Tableau& t) : shape_(t.shape()), rows_(t.rows()) {
  for (auto& row : rows_) std::sort(row.begin(), row.end());
}

Tabloid::Tabloid(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  check_rows_match_shape(shape_, rows_);
  check_bijective(shape_, rows_);
  for (auto& row : rows_) std::sort(row.begin(), row.end());
}

std::vector<int> Tabloid::flattened() const {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n()));
  for (const auto& row : rows_) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

Tableau Tabloid::representative() const { return Tableau(shape_, rows_); }

bool Tabloid::operator<(const Tabloid& other) const {
  if (shape_ != other.shape_) return shape_.parts() < other.shape_.parts();
  return flattened() < other.flattened();
}

Tableau sequential_filling(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(shape.row_count()));
  int next = 1;
  for (int part : shape.parts()) {
    std::vector<int> row(static_cast<std::size_t>(part));
    for (int& cell : row) cell = next++;
    rows.push_back(std::move(row));
  }
  return Tableau(shape, std::move(rows));
}

Tableau act(const Permutation& p, const Tableau& t) {
  if (p.n() != t.n()) throw invalid_argument("permutation degree does not match tableau size");
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& entry : row) entry = p(entry);
  return Tableau(t.shape(), std::move(rows));
}

Tabloid act(const Permutation& p, const Tabloid& t) {
  return canonicalize(act(p, t.representative()));
}

Tabloid canonicalize(const Tableau& t) { return Tabloid(t); }

bool row_equivalent(const Tableau& a, const Tableau& b) {
  if (a.shape() != b.shape()) throw shape_error("tableaux have different shapes");
  return canonicalize(a) == canonicalize(b);
}

std::vector<Tabloid> enumerate_tabloids(const Partition& shape, int bound) {
  if (shape.n() > bound)
    throw capacity_error("enumeration of shape " + shape.to_string() + " exceeds bound " +
                         std::to_string(bound));

  std::vector<Tabloid> result;
  std::vector<std::vector<int>> rows;
  std::vector<int> pool(static_cast<std::size_t>(shape.n()));
  for (int i = 0; i < shape.n(); ++i) pool[static_cast<std::size_t>(i)] = i + 1;

  // Choosing each row as a lexicographically increasing combination of the
  // remaining entries yields canonical (row-major numeric) order directly.
  auto recurse = [&](auto&& self, const std::vector<int>& available, int row_index) -> void {
    if (row_index == shape.row_count()) {
      result.emplace_back(shape, rows);
      return;
    }
    const int take = shape.parts()[static_cast<std::size_t>(row_index)];
    const int m = static_cast<int>(available.size());
    std::vector<int> idx(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<int> row(static_cast<std::size_t>(take));
      std::vector<int> rest;
      rest.reserve(static_cast<std::size_t>(m - take));
      {
        std::size_t k = 0;
        for (int i = 0; i < m; ++i) {
          if (k < idx.size() && idx[k] == i) {
            row[k] = available[static_cast<std::size_t>(i)];
            ++k;
          } else {
            rest.push_back(available[static_cast<std::size_t>(i)]);
          }
        }
      }
      rows.push_back(std::move(row));
      self(self, rest, row_index + 1);
      rows.pop_back();

      // next combination
      int i = take - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == i + m - take) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < take; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  };
  recurse(recurse, pool, 0);
  return result;
}

}  // namespace tabassign
