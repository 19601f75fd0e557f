#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tabassign/assignment.hpp"

namespace tabassign {

namespace detail {

/// Shared sparse coefficient map over the standard-assignment-tabloid
/// basis of one shape. Keys are row-major entry vectors so the map order
/// is the canonical (numeric) basis order; absent key means 0.
class BasisCoefficients {
public:
  explicit BasisCoefficients(Partition shape) : shape_(std::move(shape)) {}

  const Partition& shape() const noexcept { return shape_; }
  const std::map<std::vector<int>, double>& entries() const noexcept { return entries_; }

  double coefficient(const StandardAssignmentTabloid& basis) const;
  double coefficient(std::string_view term) const;
  void accumulate(const StandardAssignmentTabloid& basis, double delta);

  /// (encoded key, coefficient) pairs in canonical order, zeros dropped.
  std::vector<std::pair<std::string, double>> terms() const;

  /// "c1*K1 + c2*K2 + ..." with canonical term order; "0" when empty.
  std::string to_string() const;

  bool operator==(const BasisCoefficients&) const = default;

protected:
  static BasisCoefficients parse_text(std::string_view text, const Partition& shape);

private:
  Partition shape_;
  std::map<std::vector<int>, double> entries_;
};

}  // namespace detail

/// Real linear combination of standard assignment tabloids; nonnegative
/// integer coefficients encode k consecutive copies of assignments.
class KVector : public detail::BasisCoefficients {
public:
  explicit KVector(Partition shape) : BasisCoefficients(std::move(shape)) {}
  KVector(Partition shape, const std::vector<std::pair<std::string, double>>& terms);

  static KVector basis(const StandardAssignmentTabloid& tabloid);

  /// Parses "coeff*term + coeff*term + ..."; a bare term has coefficient 1;
  /// whitespace around '+' and '*' is insignificant.
  static KVector parse(std::string_view text, const Partition& shape);

  KVector& operator+=(const KVector& other);
  KVector& operator*=(double scalar);
  friend KVector operator+(KVector lhs, const KVector& rhs) { return lhs += rhs; }
  friend KVector operator*(double scalar, KVector v) { return v *= scalar; }

private:
  explicit KVector(detail::BasisCoefficients base) : BasisCoefficients(std::move(base)) {}
};

/// Element of the dual space: coordinates in the dual basis, one per
/// standard assignment tabloid.
class Functional : public detail::BasisCoefficients {
public:
  explicit Functional(Partition shape) : BasisCoefficients(std::move(shape)) {}
  Functional(Partition shape, const std::vector<std::pair<std::string, double>>& terms);

  static Functional parse(std::string_view text, const Partition& shape);

private:
  explicit Functional(detail::BasisCoefficients base) : BasisCoefficients(std::move(base)) {}
};

}  // namespace tabassign
