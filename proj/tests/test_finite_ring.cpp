#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <grw/constructions.hpp>
#include <grw/finite_ring.hpp>

using namespace grw;

namespace {

// 2x2 matrices over Z_2 via the construction library, as a plain ring
FiniteRing m2z2() { return matrix_carrier(FiniteRing::zmod(2), 2, false).ring; }

}  // namespace

TEST_CASE("zmod basics") {
  FiniteRing r = FiniteRing::zmod(4);
  CHECK(r.order == 4);
  CHECK(r.zero == 0);
  CHECK(r.one == 1);
  CHECK(r.plus(3, 2) == 1);
  CHECK(r.times(3, 3) == 1);
  CHECK(r.minus(3) == 1);
  CHECK(r.sub(1, 3) == 2);
  CHECK(r.power(3, 2) == 1);
  CHECK(r.is_commutative());
  CHECK_THROWS_AS(FiniteRing::zmod(0), RingError);
}

TEST_CASE("table validation rejects corrupted tables") {
  FiniteRing z4 = FiniteRing::zmod(4);
  int n = z4.order;
  std::vector<std::vector<Elem>> add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      add[i][j] = z4.plus(i, j);
      mul[i][j] = z4.times(i, j);
    }
  CHECK_NOTHROW(FiniteRing::from_tables(add, mul));
  auto bad = mul;
  bad[2][3] = 1;  // 2*3 = 6 = 2 in Z_4; claiming 1 breaks distributivity
  CHECK_THROWS_AS(FiniteRing::from_tables(add, bad), RingError);
  auto bad_add = add;
  bad_add[1][2] = 0;
  CHECK_THROWS_AS(FiniteRing::from_tables(bad_add, mul), RingError);
  auto oob = mul;
  oob[0][0] = 9;
  CHECK_THROWS_AS(FiniteRing::from_tables(add, oob), RingError);
}

TEST_CASE("units of Z_4 and Z_6") {
  CHECK(units(FiniteRing::zmod(4)).members == std::vector<Elem>{1, 3});
  CHECK(units(FiniteRing::zmod(6)).members == std::vector<Elem>{1, 5});
  FiniteRing z4 = FiniteRing::zmod(4);
  CHECK(unit_inverse(z4, 3) == 3);
}

TEST_CASE("idempotents and nilpotents") {
  CHECK(idempotents(FiniteRing::zmod(6)).members == std::vector<Elem>{0, 1, 3, 4});
  CHECK(nilpotents(FiniteRing::zmod(4)).members == std::vector<Elem>{0, 2});
  CHECK(nilpotents(FiniteRing::zmod(6)).members == std::vector<Elem>{0});
  FiniteRing z8 = FiniteRing::zmod(8);
  CHECK(z8.is_nilpotent(2));
  CHECK_FALSE(z8.is_nilpotent(3));
}

TEST_CASE("M_2(Z_2) classifier counts") {
  FiniteRing r = m2z2();
  CHECK(r.order == 16);
  CHECK_FALSE(r.is_commutative());
  CHECK(units(r).size() == 6);
  CHECK(idempotents(r).size() == 8);
  CHECK(nilpotents(r).size() == 4);
}

TEST_CASE("center of M_2(Z_2) is the scalar matrices") {
  CHECK(center(m2z2()).size() == 2);
  CHECK(center(FiniteRing::zmod(6)).size() == 6);
}

TEST_CASE("jacobson radical by quasi-regularity") {
  CHECK(jacobson_radical(FiniteRing::zmod(4)).members == std::vector<Elem>{0, 2});
  CHECK(jacobson_radical(FiniteRing::zmod(12)).members == std::vector<Elem>{0, 6});
  CHECK(jacobson_radical(FiniteRing::zmod(6)).members == std::vector<Elem>{0});
  CHECK(jacobson_radical(m2z2()).members == std::vector<Elem>{0});
}

TEST_CASE("right ideal closure") {
  FiniteRing z6 = FiniteRing::zmod(6);
  CHECK(right_ideal_closure(z6, {2}).members == std::vector<Elem>{0, 2, 4});
  CHECK(right_ideal_closure(z6, {1}).size() == 6);
  CHECK(right_ideal_closure(z6, {}).members == std::vector<Elem>{0});
  CHECK(two_sided_ideal_closure(z6, {3}).members == std::vector<Elem>{0, 3});
}

TEST_CASE("maximal right ideals of Z_6") {
  auto ms = maximal_right_ideals(FiniteRing::zmod(6));
  REQUIRE(ms.size() == 2);
  std::vector<std::vector<Elem>> got;
  for (const auto& m : ms) got.push_back(m.members);
  std::sort(got.begin(), got.end());
  CHECK(got[0] == std::vector<Elem>{0, 2, 4});
  CHECK(got[1] == std::vector<Elem>{0, 3});
}

TEST_CASE("maximal right ideals respect the cap") {
  Caps caps;
  caps.ideal_lattice = 4;
  CHECK_THROWS_AS(maximal_right_ideals(FiniteRing::zmod(6), caps), CapExceeded);
}

TEST_CASE("maximal right ideals of the order-1 ring") {
  // the zero ring has no proper ideals at all
  CHECK(maximal_right_ideals(FiniteRing::zmod(1)).empty());
}

TEST_CASE("intersection of maximal right ideals equals J") {
  for (int n : {2, 4, 6, 8, 9, 12}) {
    FiniteRing r = FiniteRing::zmod(n);
    auto ms = maximal_right_ideals(r);
    std::vector<char> mask(r.order, 1);
    for (const auto& m : ms)
      for (Elem x = 0; x < r.order; ++x)
        if (!m.mask[x]) mask[x] = 0;
    CHECK(ElementSet::from_mask(mask).members == jacobson_radical(r).members);
  }
}
