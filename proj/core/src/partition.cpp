#include "tabassign/partition.hpp"

#include <charconv>
#include <limits>

#include "tabassign/errors.hpp"

namespace tabassign {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw invalid_argument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p)
      throw parse_error("bad shape '" + std::string(text) + "'");
    parts.push_back(value);
    p = next;
    if (p < end) {
      if (*p != ',') throw parse_error("bad shape '" + std::string(text) + "'");
      ++p;
      if (p == end) throw parse_error("bad shape '" + std::string(text) + "'");
    }
  }
  if (parts.empty()) throw parse_error("empty shape");
  try {
    return Partition(std::move(parts));
  } catch (const invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw invalid_argument("partitions_of requires n >= 1");
  std::vector<Partition> result;
  std::vector<int> current;
  // Descending first parts with bounded remainder gives reverse-lex order.
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return result;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw capacity_error("count overflows 64 bits");
  return a * b;
}

}  // namespace

std::uint64_t young_subgroup_order(const Partition& shape) {
  std::uint64_t order = 1;
  for (int part : shape.parts())
    for (int k = 2; k <= part; ++k) order = checked_mul(order, static_cast<std::uint64_t>(k));
  return order;
}

}  // namespace tabassign
