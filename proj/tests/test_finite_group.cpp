#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <grw/finite_group.hpp>

using namespace grw;

TEST_CASE("cyclic groups: table, names, inverses") {
  FiniteGroup g = FiniteGroup::cyclic(4);
  CHECK(g.order == 4);
  CHECK(g.identity == 0);
  CHECK(g.name(0) == "e");
  CHECK(g.name(1) == "g");
  CHECK(g.name(2) == "g2");
  CHECK(g.name(3) == "g3");
  CHECK(g.op(1, 3) == 0);
  CHECK(g.inverse(1) == 3);
  CHECK(g.by_name("g2") == 2);
  CHECK(g.is_abelian());
}

TEST_CASE("trivial group is C_1") {
  FiniteGroup g = FiniteGroup::trivial();
  CHECK(g.order == 1);
  CHECK(g.op(0, 0) == 0);
}

TEST_CASE("product groups join names with a dot") {
  FiniteGroup g = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(g.order == 4);
  CHECK(g.is_abelian());
  // every non-identity element has order 2
  for (Elem x = 1; x < g.order; ++x) CHECK(g.op(x, x) == g.identity);
  bool found = false;
  for (const auto& n : g.names) found = found || n.find('.') != std::string::npos;
  CHECK(found);
}

TEST_CASE("from_table validates exhaustively") {
  // not associative: tweak one cell of C_3
  std::vector<std::vector<Elem>> t = {{0, 1, 2}, {1, 2, 0}, {2, 0, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(t), GroupError);
  // no identity
  std::vector<std::vector<Elem>> t2 = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_table(t2), GroupError);
  // out-of-range entry
  std::vector<std::vector<Elem>> t3 = {{0, 1}, {1, 5}};
  CHECK_THROWS_AS(FiniteGroup::from_table(t3), GroupError);
}

TEST_CASE("element orders and p-group detection") {
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK(c4.element_order(0) == 1);
  CHECK(c4.element_order(1) == 4);
  CHECK(c4.element_order(2) == 2);
  CHECK(c4.is_p_group(2));
  CHECK_FALSE(c4.is_p_group(3));
  FiniteGroup c6 = FiniteGroup::cyclic(6);
  CHECK_FALSE(c6.is_p_group(2));
  CHECK_FALSE(c6.is_p_group(3));
}

TEST_CASE("subgroup enumeration of C_4") {
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  auto subs = c4.subgroups();
  CHECK(subs.size() == 3);  // {e}, {e,g2}, C_4
  CHECK(c4.is_subgroup({0}));
  CHECK(c4.is_subgroup({0, 2}));
  CHECK_FALSE(c4.is_subgroup({0, 1}));
  CHECK(c4.is_normal({0, 2}));
}

TEST_CASE("quotient C_4 / {e, g2} is C_2") {
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  GroupQuotient q = c4.quotient({0, 2});
  CHECK(q.group.order == 2);
  CHECK(q.group.same_table(FiniteGroup::cyclic(2)));
  CHECK(q.coset_of[0] == q.coset_of[2]);
  CHECK(q.coset_of[1] == q.coset_of[3]);
  CHECK(q.coset_of[0] != q.coset_of[1]);
}

TEST_CASE("same_table distinguishes C_4 from C_2 x C_2") {
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  FiniteGroup v4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK_FALSE(c4.same_table(v4));
  CHECK(c4.same_table(FiniteGroup::cyclic(4)));
}
