#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tabassign/partition.hpp"

namespace tabassign {

/// Element of the symmetric group on {1..n}, stored as its image list.
/// Composition convention: (p.compose(q))(x) = p(q(x)).
class Permutation {
public:
  static Permutation identity(int n);

  /// images[i-1] is the image of i; must be a bijection of {1..n}.
  static Permutation from_images(std::vector<int> images);

  /// Parses disjoint-cycle notation, e.g. "(1 3 4 2)" or "(1 2)(3 4)".
  /// "e" and "()" denote the identity; fixed points may be omitted.
  static Permutation from_cycles(std::string_view text, int n);

  /// Canonical class representative: consecutive blocks, one cycle per part.
  static Permutation from_cycle_type(const Partition& type);

  int n() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const;  // 1-based
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation compose(const Permutation& q) const;
  Permutation inverse() const;
  int sign() const;
  Partition cycle_type() const;
  bool is_identity() const;

  /// Cycle notation with fixed points omitted; "e" for the identity.
  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;

private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

}  // namespace tabassign
