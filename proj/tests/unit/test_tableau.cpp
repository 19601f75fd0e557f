#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tabassign/errors.hpp"
#include "tabassign/tableau.hpp"

using namespace tabassign;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(23);
  return gen;
}

Permutation random_permutation(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation::from_images(std::move(images));
}

Tableau random_tableau(const Partition& shape) {
  std::vector<int> entries(static_cast<std::size_t>(shape.n()));
  std::iota(entries.begin(), entries.end(), 1);
  std::shuffle(entries.begin(), entries.end(), rng());
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  for (int part : shape.parts()) {
    rows.emplace_back(entries.begin() + static_cast<std::ptrdiff_t>(pos),
                      entries.begin() + static_cast<std::ptrdiff_t>(pos) + part);
    pos += static_cast<std::size_t>(part);
  }
  return Tableau(shape, std::move(rows));
}

// Oracle: enumerate all n! fillings of the shape and dedupe by sorted rows.
std::set<std::vector<std::vector<int>>> oracle_tabloids(const Partition& shape) {
  std::vector<int> entries(static_cast<std::size_t>(shape.n()));
  std::iota(entries.begin(), entries.end(), 1);
  std::set<std::vector<std::vector<int>>> out;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int part : shape.parts()) {
      std::vector<int> row(entries.begin() + static_cast<std::ptrdiff_t>(pos),
                           entries.begin() + static_cast<std::ptrdiff_t>(pos) + part);
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
      pos += static_cast<std::size_t>(part);
    }
    out.insert(std::move(rows));
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

// All row rearrangements of a tabloid representative.
std::vector<Tableau> class_members(const Tabloid& tabloid) {
  std::vector<std::vector<int>> rows = tabloid.rows();
  std::vector<Tableau> members;
  auto recurse = [&](auto&& self, std::size_t row) -> void {
    if (row == rows.size()) {
      members.emplace_back(tabloid.shape(), rows);
      return;
    }
    std::sort(rows[row].begin(), rows[row].end());
    do {
      self(self, row + 1);
    } while (std::next_permutation(rows[row].begin(), rows[row].end()));
  };
  recurse(recurse, 0);
  return members;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

TEST_CASE("tableau validation") {
  const Partition shape({2, 1});
  CHECK_THROWS_AS(Tableau(shape, {{1, 2, 3}}), shape_error);
  CHECK_THROWS_AS(Tableau(shape, {{1, 2}, {2}}), invalid_filling);
  CHECK_THROWS_AS(Tableau(shape, {{1, 4}, {2}}), invalid_filling);
  CHECK_NOTHROW(Tableau(shape, {{2, 1}, {3}}));
}

TEST_CASE("act on tableau") {
  const Tableau t(Partition({2, 1}), {{1, 2}, {3}});
  CHECK(act(Permutation::identity(3), t) == t);

  const auto swapped = act(Permutation::from_cycles("(2 3)", 3), t);
  CHECK(swapped.rows() == std::vector<std::vector<int>>{{1, 3}, {2}});

  for (int trial = 0; trial < 50; ++trial) {
    const Partition shape({3, 2, 1});
    const auto result = act(random_permutation(6), random_tableau(shape));
    auto flat = result.flattened();
    std::sort(flat.begin(), flat.end());
    std::vector<int> expected(6);
    std::iota(expected.begin(), expected.end(), 1);
    REQUIRE(flat == expected);  // still a bijective filling
  }
}

TEST_CASE("act rejects size mismatch") {
  const Tableau t(Partition({2, 1}), {{1, 2}, {3}});
  CHECK_THROWS_AS(act(Permutation::identity(4), t), invalid_argument);
}

TEST_CASE("canonicalize sorts rows") {
  const Tabloid tabloid = canonicalize(Tableau(Partition({2, 1}), {{2, 1}, {3}}));
  CHECK(tabloid.rows() == std::vector<std::vector<int>>{{1, 2}, {3}});

  const Tableau sorted(Partition({2, 1}), {{1, 2}, {3}});
  CHECK(canonicalize(sorted).rows() == sorted.rows());

  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_tableau(Partition({3, 2, 2, 1}));
    CHECK(canonicalize(canonicalize(t).representative()) == canonicalize(t));
  }
}

TEST_CASE("act on tabloid") {
  const Tabloid tabloid(Partition({2, 1}), {{1, 2}, {3}});
  CHECK(act(Permutation::from_cycles("(2 3)", 3), tabloid).rows() ==
        std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(act(Permutation::identity(3), tabloid) == tabloid);
}

TEST_CASE("tabloid action is independent of the representative") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& shape : partitions_of(n)) {
      for (const auto& tabloid : enumerate_tabloids(shape)) {
        const auto members = class_members(tabloid);
        for (int trial = 0; trial < 3; ++trial) {
          const auto p = random_permutation(n);
          const auto expected = canonicalize(act(p, members.front()));
          for (const auto& member : members)
            REQUIRE(canonicalize(act(p, member)) == expected);
        }
      }
    }
  }
}

TEST_CASE("row equivalence") {
  const Partition shape({2, 1});
  const Tableau a(shape, {{1, 2}, {3}});
  const Tableau b(shape, {{2, 1}, {3}});
  const Tableau c(shape, {{1, 3}, {2}});
  CHECK(row_equivalent(a, b));
  CHECK(row_equivalent(a, a));
  CHECK_FALSE(row_equivalent(a, c));
  CHECK_THROWS_AS(row_equivalent(a, Tableau(Partition({3}), {{1, 2, 3}})), shape_error);
}

TEST_CASE("enumerate_tabloids counts and order") {
  CHECK(enumerate_tabloids(Partition({5})).size() == 1);

  const auto row_shape = enumerate_tabloids(Partition({3, 1}));
  REQUIRE(row_shape.size() == 4);
  CHECK(row_shape[0].rows() == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
  CHECK(row_shape[1].rows() == std::vector<std::vector<int>>{{1, 2, 4}, {3}});
  CHECK(row_shape[2].rows() == std::vector<std::vector<int>>{{1, 3, 4}, {2}});
  CHECK(row_shape[3].rows() == std::vector<std::vector<int>>{{2, 3, 4}, {1}});

  // Oracle: brute force over all 4! tableaux then dedupe.
  const auto square = enumerate_tabloids(Partition({2, 2}));
  CHECK(square.size() == 6);
  const auto oracle = oracle_tabloids(Partition({2, 2}));
  REQUIRE(oracle.size() == 6);
  for (const auto& tabloid : square) CHECK(oracle.count(tabloid.rows()) == 1);
}

TEST_CASE("enumerate_tabloids is sorted and duplicate-free") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const auto tabloids = enumerate_tabloids(shape);
      for (std::size_t i = 1; i < tabloids.size(); ++i)
        REQUIRE(tabloids[i - 1] < tabloids[i]);
    }
  }
}

TEST_CASE("count law |tabloids| = n!/young_subgroup_order") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : partitions_of(n))
      REQUIRE(enumerate_tabloids(shape).size() == factorial(n) / young_subgroup_order(shape));
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_tabloids(Partition({6, 5})), capacity_error);
  CHECK_NOTHROW(enumerate_tabloids(Partition({6, 5}), 11));
}

TEST_CASE("action axioms on tabloids") {
  const Partition shape({3, 2});
  const auto tabloids = enumerate_tabloids(shape);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_permutation(5);
    const auto q = random_permutation(5);
    const auto& tabloid = tabloids[rng()() % tabloids.size()];
    REQUIRE(act(Permutation::identity(5), tabloid) == tabloid);
    REQUIRE(act(p.compose(q), tabloid) == act(p, act(q, tabloid)));
  }
}
