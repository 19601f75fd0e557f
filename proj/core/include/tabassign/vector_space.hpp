#pragma once

#include <cstdint>
#include <vector>

#include "tabassign/kvector.hpp"
#include "tabassign/schedule.hpp"

namespace tabassign {

/// Dimension of the k-assignments vector space of the shape:
/// n!/(lambda_1! ... lambda_i!).
std::uint64_t dimension(const Partition& shape);

/// Permutation action: each basis tabloid is relabelled through p, the
/// coefficients ride along. Linear in v.
KVector act(const Permutation& p, const KVector& v);

/// Euclidean inner product over the canonical basis.
double inner_product(const KVector& u, const KVector& v);

/// Natural pairing <f, v> = f(v); dual basis pairs by Kronecker delta.
double pairing(const Functional& f, const KVector& v);

/// Number of basis tabloids of the shape fixed by p; the character of the
/// permutation representation, constant on conjugacy classes.
std::uint64_t character(const Partition& shape, const Permutation& p,
                        int bound = kDefaultEnumerationBound);

/// Character table: shapes index the rows and cycle types the columns,
/// both in lexicographically ascending partition order, so the identity
/// class is the first column and carries the dimensions.
struct CharacterTable {
  std::vector<Partition> partitions;  // row = shape order; column = class order
  std::vector<std::vector<std::uint64_t>> values;
};

CharacterTable character_table(int n, int bound = kDefaultEnumerationBound);

/// Dense square matrix acting on coordinate vectors in canonical basis order.
class SquareMatrix {
public:
  explicit SquareMatrix(int order);
  SquareMatrix(int order, std::vector<double> row_major);

  static SquareMatrix identity(int order);
  static SquareMatrix diagonal(const std::vector<double>& diag);

  int order() const noexcept { return order_; }
  double at(int row, int col) const { return data_[index(row, col)]; }
  double& at(int row, int col) { return data_[index(row, col)]; }

  SquareMatrix transpose() const;
  /// Gauss-Jordan with partial pivoting; a pivot below 1e-12 relative to
  /// the largest entry rejects the matrix as singular.
  SquareMatrix inverse() const;

private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(col);
  }

  int order_;
  std::vector<double> data_;
};

/// y = M x over the canonical coordinates of v.
KVector apply_matrix(const SquareMatrix& m, const KVector& v,
                     int bound = kDefaultEnumerationBound);

/// Contragredient transform: coordinates of f multiplied by transpose(M^-1),
/// so pairing(dual_transform(M,f), apply_matrix(M,v)) == pairing(f,v).
Functional dual_transform(const SquareMatrix& m, const Functional& f,
                          int bound = kDefaultEnumerationBound);

/// Permutation matrix of act(p, .) on the canonical basis, column j holding
/// the coordinates of the image of basis vector j.
SquareMatrix action_matrix(const Permutation& p, const Partition& shape,
                           int bound = kDefaultEnumerationBound);

/// Functional whose coordinate at each basis tabloid is that tabloid's
/// schedule turnaround for the given graph and system.
Functional turnaround_functional(const Partition& shape, const TaskGraph& graph,
                                 const ProcessorSystem& system,
                                 int bound = kDefaultEnumerationBound);

}  // namespace tabassign
