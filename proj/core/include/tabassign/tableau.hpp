#pragma once

#include <vector>

#include "tabassign/partition.hpp"
#include "tabassign/permutation.hpp"

namespace tabassign {

/// Default cap on the size n for exhaustive enumeration; tabloid counts
/// grow as multinomial coefficients.
inline constexpr int kDefaultEnumerationBound = 10;

/// Young tableau: bijective filling of the shape-lambda diagram with {1..n}.
class Tableau {
public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int n() const noexcept { return shape_.n(); }

  /// Entries in row-major order.
  std::vector<int> flattened() const;

  bool operator==(const Tableau&) const = default;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Row-equivalence class of tableaux, stored by its canonical
/// representative (each row sorted ascending).
class Tabloid {
public:
  explicit Tabloid(const Tableau& t);
  Tabloid(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int n() const noexcept { return shape_.n(); }

  std::vector<int> flattened() const;
  Tableau representative() const;

  bool operator==(const Tabloid&) const = default;
  /// Canonical total order: numeric comparison of row-major entries
  /// (shapes compared first so mixed-shape containers stay coherent).
  bool operator<(const Tabloid& other) const;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;  // each row sorted ascending
};

/// The sequential row-major filling 1..n of the shape.
Tableau sequential_filling(const Partition& shape);

Tableau act(const Permutation& p, const Tableau& t);
Tabloid act(const Permutation& p, const Tabloid& t);
Tabloid canonicalize(const Tableau& t);
bool row_equivalent(const Tableau& a, const Tableau& b);

/// All distinct tabloids of the shape, in canonical order. The returned
/// list has n!/(lambda_1! ... lambda_i!) elements.
std::vector<Tabloid> enumerate_tabloids(const Partition& shape,
                                        int bound = kDefaultEnumerationBound);

}  // namespace tabassign
