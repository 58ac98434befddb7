#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <grw/constructions.hpp>
#include <grw/grading.hpp>
#include <grw/iso.hpp>

using namespace grw;

namespace {

// M_2(Z_2) with sigma = (e, g) over C_2: R_e diagonal, R_g antidiagonal.
// Elements encode as a + 2b + 4c + 8d for [[a,b];[c,d]], so e11 = 1,
// swap = 6, e22 = 8, identity = 9.
GradedRing e3() {
  GradedRing base = trivial_graded(FiniteRing::zmod(2), FiniteGroup::cyclic(2));
  return matrix_graded(base, 2, {0, 1});
}

}  // namespace

TEST_CASE("trivial grading puts everything in the identity component") {
  GradedRing r = trivial_graded(FiniteRing::zmod(4), FiniteGroup::cyclic(2));
  CHECK(r.component(0).size() == 4);
  CHECK(r.component(1).size() == 1);
  CHECK(support(r) == std::vector<Elem>{0});
  CHECK(homogeneous_elements(r).size() == 4);
}

TEST_CASE("e3 grading: components, degrees, support") {
  GradedRing r = e3();
  CHECK(r.ring.order == 16);
  CHECK(r.component(0).size() == 4);
  CHECK(r.component(1).size() == 4);
  CHECK(support(r) == std::vector<Elem>{0, 1});
  CHECK(degree(r, 1) == 0);   // e11 is diagonal
  CHECK(degree(r, 6) == 1);   // swap is antidiagonal
  CHECK_THROWS_AS(degree(r, 0), ZeroHasNoDegree);
  CHECK_THROWS_AS(degree(r, 7), NotHomogeneous);  // e12 + e21 + e11 is mixed
  CHECK(homogeneous_elements(r).size() == 7);
  CHECK(r.is_homogeneous(6));
  CHECK_FALSE(r.is_homogeneous(7));
  // split of a mixed element recombines
  Elem x = 7;
  CHECK(r.ring.plus(r.part(x, 0), r.part(x, 1)) == x);
}

TEST_CASE("grading validation failures carry a witness kind") {
  FiniteRing z4 = FiniteRing::zmod(4);
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  // component 0 not an additive subgroup
  {
    auto out = validate_grading(z4, c2, {ElementSet(4, {0, 1}), ElementSet(4, {0})});
    REQUIRE_FALSE(out.ok());
    CHECK(out.violations.front().kind == GradingViolation::NotSubgroup);
  }
  // subgroups but sizes do not multiply out
  {
    auto out = validate_grading(z4, c2, {ElementSet(4, {0, 2}), ElementSet(4, {0})});
    REQUIRE_FALSE(out.ok());
    CHECK(out.violations.front().kind == GradingViolation::NotDirectSum);
  }
  // closure violation: Z_4 = {0,2} + {0,1}? {0,1} is not even a subgroup
  // so use Z_2 x Z_2 style components on Z_4: {0,2} and {0,2} overlap
  {
    auto out = validate_grading(z4, c2, {ElementSet(4, {0, 2}), ElementSet(4, {0, 2})});
    REQUIRE_FALSE(out.ok());
    CHECK(out.violations.front().kind == GradingViolation::NotDirectSum);
  }
}

TEST_CASE("deleting a component element breaks the grading") {
  GradedRing r = e3();
  auto comps = r.grading.components;
  // remove the swap matrix from R_g
  std::vector<Elem> reduced;
  for (Elem x : comps[1].members)
    if (x != 6) reduced.push_back(x);
  comps[1] = ElementSet(r.ring.order, reduced);
  auto out = validate_grading(r.ring, r.group(), comps);
  REQUIRE_FALSE(out.ok());
  auto k = out.violations.front().kind;
  CHECK((k == GradingViolation::NotSubgroup || k == GradingViolation::NotDirectSum));
}

TEST_CASE("homogeneous ideal recognition") {
  GradedRing r = trivial_graded(FiniteRing::zmod(4), FiniteGroup::cyclic(2));
  auto chk = is_homogeneous_ideal(r, ElementSet(4, {0, 2}), Side::TwoSided);
  REQUIRE(chk.ok());
  CHECK(chk.ideal->members.members == std::vector<Elem>{0, 2});
  CHECK(is_graded_nil(r, *chk.ideal));
  auto bad = is_homogeneous_ideal(r, ElementSet(4, {0, 1}), Side::TwoSided);
  CHECK_FALSE(bad.ok());
}

TEST_CASE("graded Jacobson radical") {
  GradedRing z4 = trivial_graded(FiniteRing::zmod(4), FiniteGroup::cyclic(2));
  CHECK(graded_jacobson_radical(z4).members.members == std::vector<Elem>{0, 2});
  CHECK(jacobson_radical(z4.ring).members == std::vector<Elem>{0, 2});
  GradedRing r = e3();
  CHECK(graded_jacobson_radical(r).members.members == std::vector<Elem>{0});
  CHECK(is_graded_local(z4));
  CHECK_FALSE(is_graded_local(r));
}

TEST_CASE("quotient Z_4 / {0,2} is Z_2") {
  GradedRing z4 = trivial_graded(FiniteRing::zmod(4), FiniteGroup::cyclic(2));
  auto ideal = is_homogeneous_ideal(z4, ElementSet(4, {0, 2}), Side::TwoSided);
  REQUIRE(ideal.ok());
  QuotientResult q = quotient_graded(z4, *ideal.ideal);
  CHECK(q.quotient.ring.order == 2);
  CHECK(rings_isomorphic(q.quotient.ring, FiniteRing::zmod(2)));
  CHECK(q.projection.is_ring_homomorphism());
  CHECK(q.projection.is_surjective());
  CHECK(is_degree_preserving(q.projection));
  auto k = kernel_is_homogeneous(q.projection);
  CHECK(k.ok());
}

TEST_CASE("identity component subring of e3 is Z_2 x Z_2") {
  GradedRing r = e3();
  SubringResult sub = identity_component_ring(r);
  CHECK(sub.ring.order == 4);
  CHECK(sub.ring.zero == 0);
  CHECK(sub.ring.one == 1);
  FiniteRing z2z2 =
      direct_product({trivial_graded(FiniteRing::zmod(2), FiniteGroup::trivial()),
                      trivial_graded(FiniteRing::zmod(2), FiniteGroup::trivial())})
          .ring;
  CHECK(rings_isomorphic(sub.ring, z2z2));
}

TEST_CASE("graded maximal right ideals of e3") {
  GradedRing r = e3();
  auto ms = graded_maximal_right_ideals(r);
  CHECK(ms.size() == 2);  // e11 R and e22 R, graded-maximal
  for (const auto& m : ms) CHECK(m.members.size() == 4);
}
