#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tabassign {

/// Integer partition: weakly decreasing positive parts. Doubles as the
/// shape of a diagram (row lengths) and as a cycle type.
class Partition {
public:
  explicit Partition(std::vector<int> parts);

  /// Parses "a,b,c" (weakly decreasing positive integers).
  static Partition parse(std::string_view text);

  int n() const noexcept { return n_; }
  int row_count() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  /// "3,1" - also the CLI/file syntax for shapes.
  std::string to_string() const;

  bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }
  bool operator!=(const Partition& other) const noexcept { return !(*this == other); }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order, (n) first and
/// (1,1,...,1) last.
std::vector<Partition> partitions_of(int n);

/// Order of the Young subgroup of the shape: product of part factorials.
std::uint64_t young_subgroup_order(const Partition& shape);

}  // namespace tabassign
