#include <doctest.h>

#include <numeric>
#include <random>

#include "tabassign/errors.hpp"
#include "tabassign/permutation.hpp"

using namespace tabassign;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

// Oracle: parity of the inversion count of the image list.
int inversion_sign(const Permutation& p) {
  int inversions = 0;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j)
      if (p(i) > p(j)) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("cycle parsing matches the two-line array") {
  const auto p = Permutation::from_cycles("(1 3 4 2)", 4);
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(p(3) == 4);
  CHECK(p(4) == 2);
}

TEST_CASE("identity spellings") {
  CHECK(Permutation::from_cycles("e", 5) == Permutation::identity(5));
  CHECK(Permutation::from_cycles("()", 3) == Permutation::identity(3));
}

TEST_CASE("disjoint transpositions") {
  const auto p = Permutation::from_cycles("(1 2)(3 4)", 4);
  CHECK(p(1) == 2);
  CHECK(p(2) == 1);
  CHECK(p(3) == 4);
  CHECK(p(4) == 3);
}

TEST_CASE("cycle parse errors") {
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2)(2 3)", 4), parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 5)", 4), parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2", 4), parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("1 2", 4), parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("", 4), parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 1)", 4), parse_error);
}

TEST_CASE("compose follows p(q(x))") {
  const auto e = Permutation::identity(4);
  const auto p = Permutation::from_cycles("(1 3 4 2)", 4);
  CHECK(e.compose(p) == p);
  CHECK(p.compose(e) == p);

  const auto t = Permutation::from_cycles("(1 2)", 4);
  CHECK(t.compose(t) == e);

  // Oracle: apply both mappings pointwise.
  const auto a = Permutation::from_cycles("(1 2)", 3);
  const auto b = Permutation::from_cycles("(2 3)", 3);
  const auto composed = a.compose(b);
  for (int x = 1; x <= 3; ++x) CHECK(composed(x) == a(b(x)));
  CHECK(composed == Permutation::from_cycles("(1 2 3)", 3));
}

TEST_CASE("compose rejects size mismatch") {
  CHECK_THROWS_AS(Permutation::identity(3).compose(Permutation::identity(4)), invalid_argument);
}

TEST_CASE("inverse") {
  const auto e = Permutation::identity(4);
  CHECK(e.inverse() == e);
  const auto t = Permutation::from_cycles("(1 2)", 4);
  CHECK(t.inverse() == t);

  const auto p = Permutation::from_cycles("(1 3 4 2)", 4);
  const auto inv = p.inverse();
  CHECK(inv == Permutation::from_cycles("(1 2 4 3)", 4));
  for (int x = 1; x <= 4; ++x) CHECK(inv(p(x)) == x);  // pointwise oracle
}

TEST_CASE("sign") {
  CHECK(Permutation::identity(6).sign() == 1);
  CHECK(Permutation::from_cycles("(2 5)", 6).sign() == -1);
  CHECK(Permutation::from_cycles("(1 2 3)", 3).sign() == inversion_sign(Permutation::from_cycles("(1 2 3)", 3)));
  CHECK(Permutation::from_cycles("(1 2 3)", 3).sign() == 1);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_permutation(1 + trial % 8, rng);
    CHECK(p.sign() == inversion_sign(p));
  }
}

TEST_CASE("cycle_type") {
  CHECK(Permutation::identity(4).cycle_type().parts() == std::vector<int>{1, 1, 1, 1});
  CHECK(Permutation::from_cycles("(1 2)", 4).cycle_type().parts() == std::vector<int>{2, 1, 1});
  CHECK(Permutation::from_cycles("(1 3 4 2)", 4).cycle_type().parts() == std::vector<int>{4});
}

TEST_CASE("from_cycle_type produces the type it names") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& type : partitions_of(n))
      CHECK(Permutation::from_cycle_type(type).cycle_type() == type);
}

TEST_CASE("group axioms on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto a = random_permutation(n, rng);
    const auto b = random_permutation(n, rng);
    const auto c = random_permutation(n, rng);
    const auto e = Permutation::identity(n);
    REQUIRE(a.compose(b).compose(c) == a.compose(b.compose(c)));
    REQUIRE(e.compose(a) == a);
    REQUIRE(a.compose(a.inverse()) == e);
  }
}

TEST_CASE("sign is a homomorphism") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto p = random_permutation(n, rng);
    const auto q = random_permutation(n, rng);
    REQUIRE(p.compose(q).sign() == p.sign() * q.sign());
  }
}

TEST_CASE("cycle type is a conjugation invariant") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto p = random_permutation(n, rng);
    const auto s = random_permutation(n, rng);
    REQUIRE(s.compose(p).compose(s.inverse()).cycle_type() == p.cycle_type());
  }
}

TEST_CASE("cycle string round-trip") {
  CHECK(Permutation::identity(5).to_cycle_string() == "e");
  CHECK(Permutation::from_cycles("(1 3 4 2)", 4).to_cycle_string() == "(1 3 4 2)");

  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto p = random_permutation(n, rng);
    CHECK(Permutation::from_cycles(p.to_cycle_string(), n) == p);
  }
}
