#include <algorithm>

#include "doctest.h"
#include "enriques/frames.hpp"
#include "enriques/isotropic_search.hpp"

using namespace enriques;

TEST_CASE("reference frame is an isotropic 10-sequence") {
  const Frame f = build_reference_frame();
  CHECK_NOTHROW(validate_frame(f));
  Class sum;
  for (int i = 0; i < 10; ++i) {
    CHECK(square(f.E[i]) == 0);
    CHECK(divisibility(f.E[i]) == 1);
    CHECK(pair(f.E[i], f.A.A) > 0);
    for (int j = 0; j < 10; ++j) CHECK(pair(f.E[i], f.E[j]) == (i == j ? 0 : 1));
    sum += f.E[i];
  }
  for (auto x : sum.coords()) CHECK(x % 3 == 0);
  CHECK(sum == 3 * f.D);
  CHECK(square(f.D) == 10);
  CHECK(f.A.A == f.D);
  CHECK(build_reference_frame().E == reference_frame().E);
}

TEST_CASE("eij intersection table") {
  const Frame& f = reference_frame();
  CHECK(pair(eij(f, 1, 2), f.E[0]) == 2);
  CHECK(pair(eij(f, 1, 2), f.E[2]) == 1);
  CHECK(pair(eij(f, 1, 2), eij(f, 3, 4)) == 2);
  CHECK(eij(f, 3, 7) == eij(f, 7, 3));
  CHECK_THROWS_AS(eij(f, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(eij(f, 0, 2), InvalidArgument);
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) {
      const Class e = eij(f, i, j);
      CHECK(is_isotropic(e));
      CHECK(is_primitive(e));
      CHECK(is_effective(e, f.A));
      for (int k = 1; k <= 10; ++k)
        for (int l = k + 1; l <= 10; ++l) {
          if (k == i && l == j) continue;
          const bool disjoint = k != i && k != j && l != i && l != j;
          CHECK(pair(e, eij(f, k, l)) == (disjoint ? 2 : 1));
        }
    }
}

TEST_CASE("isotropic classes meeting D in 4 are exactly the eij") {
  const Frame& f = reference_frame();
  const auto found = isotropic_with_pairing(f.D, 4);
  REQUIRE(found.size() == 45);
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) CHECK(std::binary_search(found.begin(), found.end(), eij(f, i, j)));
  CHECK(phi_bruteforce(f.D) == 3);
}

TEST_CASE("extend_to_maximal on a partial sequence") {
  const Frame& f = reference_frame();
  const std::vector<Class> input{f.E[0], f.E[1], f.E[2]};
  const MaximalSimpleSet m = extend_to_maximal(input);
  CHECK_NOTHROW(validate_maximal(m));
  CHECK(m.ten[0] == f.E[0]);
  CHECK(m.ten[1] == f.E[1]);
  CHECK(m.ten[2] == f.E[2]);
}

TEST_CASE("extend_to_maximal from every small prefix of the frame") {
  const Frame& f = reference_frame();
  for (std::size_t n = 1; n <= 10; ++n) {
    std::vector<Class> input(f.E.begin(), f.E.begin() + n);
    const MaximalSimpleSet m = extend_to_maximal(input);
    CHECK_NOTHROW(validate_maximal(m));
    for (std::size_t k = 0; k < n; ++k) CHECK(m.ten[k] == input[k]);
  }
}

TEST_CASE("extend_to_maximal with one pairing-2 pair realizes either member as the extra") {
  const Frame& f = reference_frame();
  const Class e12 = eij(f, 1, 2);
  const std::vector<Class> input{f.E[0], e12};

  const MaximalSimpleSet first = extend_to_maximal(input, e12);
  CHECK(first.extra == e12);
  CHECK(std::find(first.ten.begin(), first.ten.end(), f.E[0]) != first.ten.end());

  const MaximalSimpleSet second = extend_to_maximal(input, f.E[0]);
  CHECK(second.extra == f.E[0]);
  CHECK(std::find(second.ten.begin(), second.ten.end(), e12) != second.ten.end());
  CHECK_NOTHROW(validate_maximal(second));

  const MaximalSimpleSet with_others = extend_to_maximal({f.E[0], e12, f.E[4], f.E[6]}, f.E[0]);
  CHECK(with_others.extra == f.E[0]);
  for (const Class& c : {e12, f.E[4], f.E[6]})
    CHECK(std::find(with_others.ten.begin(), with_others.ten.end(), c) != with_others.ten.end());
}

TEST_CASE("extend_to_maximal is idempotent on maximal sets") {
  const Frame& f = reference_frame();
  std::vector<Class> input(f.E.begin(), f.E.end());
  input.push_back(eij(f, 3, 5));
  const MaximalSimpleSet m = extend_to_maximal(input);
  CHECK(m.extra == eij(f, 3, 5));
  CHECK(std::equal(m.ten.begin(), m.ten.end(), f.E.begin()));
  CHECK(m.pair_indices == std::pair<int, int>{3, 5});

  std::vector<Class> again(m.ten.begin(), m.ten.end());
  again.push_back(m.extra);
  const MaximalSimpleSet m2 = extend_to_maximal(again);
  CHECK(m2.ten == m.ten);
  CHECK(m2.extra == m.extra);
}

TEST_CASE("extend_to_maximal with a star pattern") {
  const Frame& f = reference_frame();
  const Class e = eij(f, 4, 9);
  const MaximalSimpleSet m = extend_to_maximal({e, f.E[3], f.E[8], f.E[0]});
  CHECK(m.extra == e);
  CHECK(m.ten[0] == f.E[3]);
  CHECK(m.ten[1] == f.E[8]);
  CHECK(m.ten[2] == f.E[0]);
}

TEST_CASE("extend_to_maximal on transported sets") {
  const Frame& f = reference_frame();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto word = random_isometry_word(seed, 5);
    const std::vector<Class> input{apply_word(f.E[0], word), apply_word(f.E[5], word), apply_word(eij(f, 1, 6), word)};
    const MaximalSimpleSet m = extend_to_maximal(input);
    CHECK_NOTHROW(validate_maximal(m));
    CHECK(m.extra == input[2]);
  }
}

TEST_CASE("extend_to_maximal rejects non-simple inputs") {
  const Frame& f = reference_frame();
  CHECK_THROWS_AS(extend_to_maximal({}), InvalidArgument);
  CHECK_THROWS_AS(extend_to_maximal({2 * f.E[0]}), InvalidArgument);
  CHECK_THROWS_AS(extend_to_maximal({f.D}), InvalidArgument);
  CHECK_THROWS_AS(extend_to_maximal({-f.E[0]}), InvalidArgument);
  // E_{1,2} and E_{3,4} meet in 2, and E_{1,2}, E_1 too: two disjoint pairing-2 pairs.
  CHECK_THROWS_AS(extend_to_maximal({eij(f, 1, 2), eij(f, 3, 4), f.E[0], f.E[2]}), InvalidArgument);
  CHECK_THROWS_AS(extend_to_maximal({f.E[0], f.E[1]}, f.E[0]), InvalidArgument);
}
