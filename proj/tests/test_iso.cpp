#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <grw/constructions.hpp>
#include <grw/iso.hpp>

using namespace grw;

namespace {

FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b) {
  FiniteGroup g = FiniteGroup::trivial();
  return direct_product({trivial_graded(a, g), trivial_graded(b, g)}).ring;
}

}  // namespace

TEST_CASE("a ring is isomorphic to itself") {
  CHECK(rings_isomorphic(FiniteRing::zmod(8), FiniteRing::zmod(8)));
}

TEST_CASE("chinese remainder isomorphisms") {
  CHECK(rings_isomorphic(FiniteRing::zmod(6),
                         product_ring(FiniteRing::zmod(2), FiniteRing::zmod(3))));
  CHECK(rings_isomorphic(FiniteRing::zmod(12),
                         product_ring(FiniteRing::zmod(4), FiniteRing::zmod(3))));
}

TEST_CASE("Z_4 is not Z_2 x Z_2") {
  CHECK_FALSE(rings_isomorphic(FiniteRing::zmod(4),
                               product_ring(FiniteRing::zmod(2), FiniteRing::zmod(2))));
}

TEST_CASE("different orders are never isomorphic") {
  CHECK_FALSE(rings_isomorphic(FiniteRing::zmod(4), FiniteRing::zmod(8)));
}

TEST_CASE("matrix ring is not commutative-isomorphic") {
  FiniteRing m2 = matrix_carrier(FiniteRing::zmod(2), 2, false).ring;
  CHECK_FALSE(rings_isomorphic(m2, FiniteRing::zmod(16)));
  CHECK(rings_isomorphic(m2, matrix_carrier(FiniteRing::zmod(2), 2, false).ring));
}

TEST_CASE("group ring identity component matches the coefficients") {
  GradedRing base = trivial_graded(FiniteRing::zmod(4), FiniteGroup::cyclic(2));
  GradedRing gr = group_ring_graded(base);
  SubringResult idc = identity_component_ring(gr);
  CHECK(rings_isomorphic(idc.ring, base.ring));
}
