#include "tabassign/vector_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tabassign/errors.hpp"

namespace tabassign {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw capacity_error("dimension overflows 64 bits");
  return a * b;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = checked_mul(result, static_cast<std::uint64_t>(n - k + i));
    result /= static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<double> coordinates(const detail::BasisCoefficients& coeffs,
                                const std::vector<StandardAssignmentTabloid>& basis) {
  std::vector<double> x(basis.size(), 0.0);
  for (std::size_t j = 0; j < basis.size(); ++j) x[j] = coeffs.coefficient(basis[j]);
  return x;
}

}  // namespace

std::uint64_t dimension(const Partition& shape) {
  // Multinomial coefficient as a product of binomials: each step stays an
  // exact integer, so only genuine overflow can throw.
  std::uint64_t result = 1;
  int remaining = shape.n();
  for (int part : shape.parts()) {
    result = checked_mul(result, binomial(remaining, part));
    remaining -= part;
  }
  return result;
}

KVector act(const Permutation& p, const KVector& v) {
  if (p.n() != v.shape().n())
    throw invalid_argument("permutation degree does not match vector shape");
  KVector out(v.shape());
  for (const auto& [term, coeff] : v.terms()) {
    const StandardAssignmentTabloid basis = decode_tabloid(term, v.shape());
    out.accumulate(StandardAssignmentTabloid(act(p, basis.task_rows())), coeff);
  }
  return out;
}

double inner_product(const KVector& u, const KVector& v) {
  if (u.shape() != v.shape()) throw invalid_argument("vectors have different shapes");
  double sum = 0.0;
  for (const auto& [flat, coeff] : u.entries()) {
    const auto it = v.entries().find(flat);
    if (it != v.entries().end()) sum += coeff * it->second;
  }
  return sum;
}

double pairing(const Functional& f, const KVector& v) {
  if (f.shape() != v.shape()) throw invalid_argument("functional and vector have different shapes");
  double sum = 0.0;
  for (const auto& [flat, coeff] : f.entries()) {
    const auto it = v.entries().find(flat);
    if (it != v.entries().end()) sum += coeff * it->second;
  }
  return sum;
}

std::uint64_t character(const Partition& shape, const Permutation& p, int bound) {
  if (p.n() != shape.n())
    throw invalid_argument("permutation degree does not match the shape");
  std::uint64_t fixed = 0;
  for (const Tabloid& tabloid : enumerate_tabloids(shape, bound))
    if (act(p, tabloid) == tabloid) ++fixed;
  return fixed;
}

CharacterTable character_table(int n, int bound) {
  if (n > bound)
    throw capacity_error("character table for n=" + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound));
  CharacterTable table;
  table.partitions = partitions_of(n);
  std::reverse(table.partitions.begin(), table.partitions.end());  // lex ascending
  for (const Partition& shape : table.partitions) {
    std::vector<std::uint64_t> row;
    row.reserve(table.partitions.size());
    for (const Partition& cycle_type : table.partitions)
      row.push_back(character(shape, Permutation::from_cycle_type(cycle_type), bound));
    table.values.push_back(std::move(row));
  }
  return table;
}

SquareMatrix::SquareMatrix(int order) : order_(order) {
  if (order < 1) throw invalid_argument("matrix order must be >= 1");
  data_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

SquareMatrix::SquareMatrix(int order, std::vector<double> row_major)
    : order_(order), data_(std::move(row_major)) {
  if (order < 1) throw invalid_argument("matrix order must be >= 1");
  if (data_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw invalid_argument("matrix data does not match its order");
}

SquareMatrix SquareMatrix::identity(int order) {
  SquareMatrix m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<double>& diag) {
  SquareMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.order(); ++i) m.at(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix out(order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) out.at(j, i) = at(i, j);
  return out;
}

SquareMatrix SquareMatrix::inverse() const {
  const int n = order_;
  SquareMatrix work = *this;
  SquareMatrix result = identity(n);

  double scale = 0.0;
  for (double v : data_) scale = std::max(scale, std::abs(v));
  const double threshold = 1e-12 * std::max(scale, 1.0);

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(work.at(row, col)) > std::abs(work.at(pivot, col))) pivot = row;
    if (std::abs(work.at(pivot, col)) < threshold)
      throw singular_matrix_error("matrix is singular within tolerance");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(result.at(pivot, j), result.at(col, j));
      }
    }
    const double inv_pivot = 1.0 / work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) *= inv_pivot;
      result.at(col, j) *= inv_pivot;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const double factor = work.at(row, col);
      if (factor == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(row, j) -= factor * work.at(col, j);
        result.at(row, j) -= factor * result.at(col, j);
      }
    }
  }
  return result;
}

KVector apply_matrix(const SquareMatrix& m, const KVector& v, int bound) {
  const auto basis = enumerate_standard_tabloids(v.shape(), bound);
  if (m.order() != static_cast<int>(basis.size()))
    throw invalid_argument("matrix order " + std::to_string(m.order()) +
                           " does not match dimension " + std::to_string(basis.size()));
  const auto x = coordinates(v, basis);
  KVector out(v.shape());
  for (int i = 0; i < m.order(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < m.order(); ++j) sum += m.at(i, j) * x[static_cast<std::size_t>(j)];
    if (sum != 0.0) out.accumulate(basis[static_cast<std::size_t>(i)], sum);
  }
  return out;
}

Functional dual_transform(const SquareMatrix& m, const Functional& f, int bound) {
  const auto basis = enumerate_standard_tabloids(f.shape(), bound);
  if (m.order() != static_cast<int>(basis.size()))
    throw invalid_argument("matrix order " + std::to_string(m.order()) +
                           " does not match dimension " + std::to_string(basis.size()));
  const SquareMatrix transform = m.inverse().transpose();
  const auto x = coordinates(f, basis);
  Functional out(f.shape());
  for (int i = 0; i < transform.order(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < transform.order(); ++j)
      sum += transform.at(i, j) * x[static_cast<std::size_t>(j)];
    if (sum != 0.0) out.accumulate(basis[static_cast<std::size_t>(i)], sum);
  }
  return out;
}

SquareMatrix action_matrix(const Permutation& p, const Partition& shape, int bound) {
  if (p.n() != shape.n())
    throw invalid_argument("permutation degree does not match the shape");
  const auto basis = enumerate_standard_tabloids(shape, bound);
  SquareMatrix m(static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const StandardAssignmentTabloid image(act(p, basis[j].task_rows()));
    const auto it = std::lower_bound(basis.begin(), basis.end(), image);
    m.at(static_cast<int>(it - basis.begin()), static_cast<int>(j)) = 1.0;
  }
  return m;
}

Functional turnaround_functional(const Partition& shape, const TaskGraph& graph,
                                 const ProcessorSystem& system, int bound) {
  Functional out(shape);
  for (const auto& tabloid : enumerate_standard_tabloids(shape, bound))
    out.accumulate(tabloid, evaluate(tabloid, graph, system).turnaround);
  return out;
}

}  // namespace tabassign
