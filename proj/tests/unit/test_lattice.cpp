#include <random>

#include "doctest.h"
#include "enriques/frames.hpp"
#include "enriques/lattice.hpp"

using namespace enriques;

namespace {

Class random_class(std::mt19937_64& rng, int spread) {
  Class::Coords c{};
  for (auto& x : c) x = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
  return Class(c);
}

}  // namespace

TEST_CASE("gram matrix invariants") {
  const auto& L = GramLattice::standard();
  CHECK(L.determinant() == -1);
  CHECK(L.signature() == std::pair<int, int>{1, 9});
  for (std::size_t i = 0; i < kRank; ++i) {
    CHECK(L.gram()[i][i] % 2 == 0);
    for (std::size_t j = 0; j < kRank; ++j) CHECK(L.gram()[i][j] == L.gram()[j][i]);
  }
}

TEST_CASE("pair and square on basis vectors") {
  const Class e1 = Class::basis(0);
  const Class e2 = Class::basis(1);
  CHECK(pair(e1, e2) == 1);
  CHECK(square(e1) == 0);
  CHECK(square(Class{}) == 0);
  for (std::size_t i = 2; i < kRank; ++i) CHECK(square(Class::basis(i)) == -2);
  const Frame& f = reference_frame();
  CHECK(square(f.E[0] + f.E[1]) == 2);
  CHECK(square(f.D) == 10);
  CHECK(pair(f.E[0], eij(f, 1, 2)) == 2);
}

TEST_CASE("bilinearity, symmetry and evenness on random vectors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Class u = random_class(rng, 9);
    const Class v = random_class(rng, 9);
    const Class w = random_class(rng, 9);
    CHECK(pair(u, v) == pair(v, u));
    CHECK(pair(u + w, v) == pair(u, v) + pair(w, v));
    CHECK(pair(3 * u, v) == 3 * pair(u, v));
    CHECK(square(u) % 2 == 0);
  }
}

TEST_CASE("divisibility") {
  const Frame& f = reference_frame();
  CHECK(divisibility(2 * f.E[0]) == 2);
  CHECK(divisibility(f.E[0] + f.E[1]) == 1);
  CHECK(divisibility(Class{}) == 0);
  CHECK(is_two_divisible(2 * f.E[0] + 4 * f.E[3]));
  CHECK_FALSE(is_primitive(6 * f.D));
  CHECK((6 * f.D).divided_by(6) == f.D);
  CHECK_THROWS_AS(f.D.divided_by(2), InvalidArgument);
}

TEST_CASE("two-divisibility equals coordinate parity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Class v = random_class(rng, 6);
    bool all_even = true;
    for (auto x : v.coords()) all_even = all_even && x % 2 == 0;
    CHECK(is_two_divisible(v) == all_even);
  }
}

TEST_CASE("effectivity convention") {
  const Frame& f = reference_frame();
  CHECK(is_effective(f.E[0], f.A));
  CHECK_FALSE(is_effective(-f.E[0], f.A));
  CHECK(is_effective(f.D, f.A));
  CHECK_THROWS_AS(is_effective(Class{}, f.A), InvalidArgument);
  CHECK_THROWS_AS(is_effective(Class::basis(2), f.A), InvalidArgument);
  CHECK_THROWS_AS(AmpleReference(f.E[0]), InvalidArgument);
}

TEST_CASE("reflections") {
  const Class r = Class::basis(4);
  CHECK(reflect(r, r) == -r);
  const Class fixed = Class::basis(0);
  REQUIRE(pair(fixed, r) == 0);
  CHECK(reflect(fixed, r) == fixed);
  CHECK_THROWS_AS(reflect(fixed, Class::basis(0)), InvalidArgument);

  std::mt19937_64 rng(3);
  for (const Class& root : root_pool()) {
    CHECK(square(root) == -2);
    const Class u = random_class(rng, 5);
    const Class v = random_class(rng, 5);
    CHECK(pair(reflect(u, root), reflect(v, root)) == pair(u, v));
    CHECK(reflect(reflect(u, root), root) == u);
    CHECK(divisibility(reflect(u, root)) == divisibility(u));
  }
}

TEST_CASE("random isometry words") {
  CHECK(random_isometry_word(5, 0).empty());
  CHECK(random_isometry_word(42, 12) == random_isometry_word(42, 12));
  CHECK(random_isometry_word(42, 12) != random_isometry_word(43, 12));
  const Frame& f = reference_frame();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto word = random_isometry_word(seed, 10);
    for (const Class& r : word) CHECK(square(r) == -2);
    const Class a = apply_word(f.D, word);
    const Class b = apply_word(f.E[2], word);
    CHECK(square(a) == 10);
    CHECK(pair(a, b) == 3);
    CHECK(is_effective(a, f.A));
  }
  CHECK(apply_word(f.D, {}) == f.D);
}

TEST_CASE("checked arithmetic reports overflow") {
  const Class big({INT64_MAX, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_THROWS_AS(2 * big, OverflowError);
  CHECK_THROWS_AS(square(Class({INT64_MAX / 2, INT64_MAX / 2, 0, 0, 0, 0, 0, 0, 0, 0})), OverflowError);
}
