#include <algorithm>
#include <set>

#include "doctest.h"
#include "enriques/decomposition_types.hpp"
#include "enriques/isotropic_search.hpp"

using namespace enriques;

namespace {

CanonicalForm F(const char* text) { return parse_form(text); }

}  // namespace

TEST_CASE("parse and format round trip") {
  const CanonicalForm f = F("1;2,0,1,1,1,1,1,0,0,0");
  CHECK(f.a0 == 1);
  CHECK(f.a[0] == 2);
  CHECK(format_form(f) == "1;2,0,1,1,1,1,1,0,0,0");
  CHECK_THROWS_AS(parse_form("1,2,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_form("1;2,0,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_form("1;2,0,1,1,1,1,1,0,0,0,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_form("1;2,0,1,1,1,1,1,0,0,x"), InvalidArgument);
  CHECK_THROWS_AS(parse_form("1;2,0,1,1,1,1,1,0,0,0,"), InvalidArgument);
}

TEST_CASE("validate") {
  CHECK_FALSE(validate(F("1;0,0,1,1,1,1,1,1,1,1")));
  CHECK(violated_constraint(F("1;0,0,1,1,1,1,1,1,1,1")) == "ordering");
  CHECK(violated_constraint(F("1;1,0,1,1,1,1,1,1,1,1")) == "frame_support");
  CHECK(violated_constraint(F("0;1,1,1,1,1,1,1,1,1,0")) == "frame_support");
  CHECK(validate(F("0;1,1,1,1,1,1,1,1,1,1")));
  CHECK(validate(F("0;4,1,0,0,0,0,0,0,0,0")));
  CHECK(violated_constraint(F("0;0,0,0,0,0,0,0,0,0,0")) == "nonzero");
  CHECK(violated_constraint(F("-1;1,0,0,0,0,0,0,0,0,0")) == "nonnegative");
  CHECK(violated_constraint(F("0;1,2,0,0,0,0,0,0,0,0")) == "ordering");
  CHECK(violated_constraint(F("0;2,1,3,0,0,0,0,0,0,0")) == "ordering");
  CHECK(validate(F("1;2,1,3,0,0,0,0,0,0,0")));
  CHECK(violated_constraint(F("0;2,2,1,2,0,0,0,0,0,0")) == "ordering");
}

TEST_CASE("vector_of and genus") {
  const Frame& f = reference_frame();
  CHECK(vector_of(F("0;1,1,0,0,0,0,0,0,0,0")) == f.E[0] + f.E[1]);
  CHECK(vector_of(F("1;2,0,0,0,0,0,0,0,0,0")) == 2 * f.E[0] + eij(f, 1, 2));
  CHECK(genus_of(F("1;2,0,0,0,0,0,0,0,0,0")) == 5);
  for (std::int64_t g = 2; g <= 30; ++g) CHECK(genus_of(CanonicalForm{0, {g - 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}) == g);
  for (std::int64_t g = 3; g <= 29; g += 2) CHECK(genus_of(CanonicalForm{1, {(g - 1) / 2, 0, 0, 0, 0, 0, 0, 0, 0, 0}}) == g);
  CHECK(genus_of(F("2;2,2,0,0,0,0,0,0,0,0")) == 21);
  CHECK_THROWS_AS(genus_of(F("1;0,0,1,1,1,1,1,1,1,1")), InvalidArgument);
  CHECK_THROWS_AS(vector_of(F("1;0,0,1,1,1,1,1,1,1,1")), InvalidArgument);
}

TEST_CASE("phi formula") {
  CHECK(phi_formula(F("0;4,1,0,0,0,0,0,0,0,0")) == 1);
  CHECK(phi_formula(F("1;2,0,0,0,0,0,0,0,0,0")) == 2);
  CHECK(phi_formula(F("2;2,2,0,0,0,0,0,0,0,0")) == 6);
  CHECK_THROWS_AS(phi_formula(F("0;3,0,0,0,0,0,0,0,0,0")), InvalidArgument);
}

TEST_CASE("length, symmetry and linear count") {
  CHECK(length_of(F("0;4,1,0,0,0,0,0,0,0,0")) == 2);
  CHECK(length_of(F("1;2,0,0,0,0,0,0,0,0,0")) == 2);
  CHECK(length_of(F("1;2,1,1,1,0,0,0,0,0,0")) == 5);
  CHECK(max_symmetry(F("1;2,1,1,1,0,0,0,0,0,0")) == 2);
  CHECK(max_symmetry(F("1;1,0,1,1,1,1,1,1,0,0")) == 6);
  CHECK(max_symmetry(F("1;2,0,1,1,1,1,1,0,0,0")) == 5);
  CHECK(max_symmetry(F("0;1,1,1,1,1,1,0,0,0,0")) == 6);
  CHECK(max_symmetry(F("1;1,1,0,0,0,0,0,0,0,0")) == 0);
  CHECK(linear_component_count(F("0;2,2,0,0,0,0,0,0,0,0")) == 2);
  CHECK(linear_component_count(F("0;4,1,0,0,0,0,0,0,0,0")) == 1);
  CHECK(linear_component_count(F("1;2,0,0,0,0,0,0,0,0,0")) == 1);
  CHECK(F("2;4,0,2,0,0,0,0,0,0,0").eps_available());
}

TEST_CASE("status rules") {
  CHECK(status_of(F("0;4,1,0,0,0,0,0,0,0,0")) == Status::UnirationalComponent);
  CHECK(status_of(F("0;1,1,1,1,1,1,0,0,0,0")) == Status::UniruledComponent);
  CHECK(status_of(F("0;2,1,1,1,1,0,0,0,0,0")) == Status::UnirationalComponent);
  CHECK(status_of(F("1;1,1,1,1,0,0,0,0,0,0")) == Status::UniruledComponent);
  CHECK(status_of(F("1;2,0,1,1,1,1,1,0,0,0")) == Status::UnknownNumericalOnly);
  CHECK(status_of(F("0;1,1,1,1,1,1,1,0,0,0")) == Status::UnirationalComponent);
  CHECK(status_of(std::vector<CanonicalForm>{F("1;2,0,1,1,1,1,1,0,0,0"), F("1;1,0,1,1,1,1,1,1,0,0")}) ==
        Status::UniruledComponent);
  CHECK_THROWS_AS(status_of(std::vector<CanonicalForm>{}), InvalidArgument);
  CHECK(to_string(Status::UniruledComponent) == "uniruled");
  CHECK(Status::UnirationalComponent > Status::UniruledComponent);
  CHECK(Status::UniruledComponent > Status::UnknownNumericalOnly);
}

TEST_CASE("status is monotone under adding representatives") {
  const auto forms = enumerate_forms(30);
  for (std::size_t i = 0; i + 1 < forms.size(); ++i) {
    const Status alone = status_of(std::vector<CanonicalForm>{forms[i]});
    const Status both = status_of(std::vector<CanonicalForm>{forms[i], forms[i + 1]});
    CHECK(both >= alone);
  }
}

TEST_CASE("enumerate_forms yields exactly the valid forms of the genus") {
  for (std::int64_t g = 2; g <= 30; ++g) {
    const auto forms = enumerate_forms(g);
    CHECK(std::is_sorted(forms.begin(), forms.end()));
    CHECK(std::set<CanonicalForm>(forms.begin(), forms.end()).size() == forms.size());
    for (const CanonicalForm& f : forms) {
      CHECK(validate(f));
      CHECK(genus_of(f) == g);
    }
    CHECK(enumerate_forms(g, 2 * (g - 1)) == forms);
  }
}

TEST_CASE("phi bounds hold on every valid form") {
  for (std::int64_t g = 2; g <= 30; ++g)
    for (const CanonicalForm& f : enumerate_forms(g)) {
      const std::int64_t phi = phi_formula(f);
      const std::int64_t h2 = 2 * (g - 1);
      CHECK(phi * phi <= h2);
      CHECK_FALSE((phi * phi < h2 && h2 < phi * phi + phi - 2));
    }
}

TEST_CASE("coefficient parity matches 2-divisibility of the vector") {
  for (std::int64_t g = 2; g <= 30; ++g)
    for (const CanonicalForm& f : enumerate_forms(g))
      CHECK((linear_component_count(f) == 2) == is_two_divisible(vector_of(f)));
  // A form outside the valid range can still be 2-divisible numerically.
  const Frame& fr = reference_frame();
  Class b = eij(fr, 1, 2);
  for (int k = 3; k <= 10; ++k) b += fr.E[k - 1];
  CHECK(is_two_divisible(b));
}

TEST_CASE("square of vector_of is even") {
  for (std::int64_t g = 2; g <= 20; ++g)
    for (const CanonicalForm& f : enumerate_forms(g)) CHECK(square(vector_of(f)) % 2 == 0);
}
