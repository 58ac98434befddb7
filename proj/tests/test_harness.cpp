#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <grw/harness.hpp>

using namespace grw;

namespace {

// small corpus: fast enough for unit tests, rich enough to exercise every
// construction kind
CorpusSpec small_spec() {
  CorpusSpec s;
  s.zmod_max = 4;
  s.cyclic_groups = {2};
  s.matrix_bases = {2};
  s.group_ring_order_cap = 16;
  s.idealization_base_cap = 8;
  s.product_factor_cap = 8;
  s.corner_source_cap = 32;
  s.subgroup_ring_cap = 16;
  return s;
}

const Corpus& small_corpus() {
  static Corpus c = generate_corpus(small_spec());
  return c;
}

}  // namespace

TEST_CASE("corpus generation is deterministic") {
  Corpus a = generate_corpus(small_spec());
  Corpus b = generate_corpus(small_spec());
  REQUIRE(a.items.size() == b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    CHECK(a.items[i]->name == b.items[i]->name);
    CHECK(a.items[i]->ring->ring.same_tables(b.items[i]->ring->ring));
  }
}

TEST_CASE("corpus contains the worked example instance") {
  bool found = false;
  for (const auto& i : small_corpus().items)
    if (i->name == "M2(Z2)(e,g)/C2") {
      found = true;
      CHECK(i->ring->ring.order == 16);
      CHECK(i->ring->component(1).size() == 4);
    }
  CHECK(found);
}

TEST_CASE("every construction kind appears") {
  bool kinds[9] = {};
  for (const auto& i : small_corpus().items) kinds[i->kind] = true;
  for (int k = 0; k < 9; ++k) CHECK(kinds[k]);
}

TEST_CASE("derived maps are surjective degree-preserving homomorphisms") {
  int maps = 0;
  for (const auto& i : small_corpus().items)
    for (const auto& dm : i->maps) {
      ++maps;
      CHECK(dm.map.is_ring_homomorphism());
      CHECK(dm.map.is_surjective());
      CHECK(is_degree_preserving(dm.map));
    }
  CHECK(maps > 10);
}

TEST_CASE("verify runs every registry entry without counterexamples") {
  Report rep = verify(small_corpus(), theorem_ids(), 1);
  CHECK(rep.theorems.size() == 18);
  for (const auto& t : rep.theorems) {
    CHECK(t.counterexamples.empty());
    CHECK(t.applicable == t.passed);
  }
}

TEST_CASE("parallel verification equals the sequential result") {
  Corpus c1 = generate_corpus(small_spec());
  Corpus c2 = generate_corpus(small_spec());
  json a = verify(c1, theorem_ids(), 1).to_json(false);
  json b = verify(c2, theorem_ids(), 3).to_json(false);
  CHECK(a == b);
}

TEST_CASE("unknown theorem id raises") {
  CHECK_THROWS_AS(verify(small_corpus(), {"T_NOPE"}), UnknownTheorem);
}

TEST_CASE("oracle cross-checks agree") {
  OracleReport rep = run_oracle_checks(small_corpus());
  CHECK(rep.checks > 100);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("search: tautology and falsum are exhausted") {
  auto taut = search_counterexample(small_corpus(), {"graded-u-nil-clean"},
                                    "graded-u-nil-clean");
  CHECK_FALSE(taut.found);
  CHECK(taut.detail == "exhausted");
}

TEST_CASE("search finds the nil-good separation") {
  auto out = search_counterexample(small_corpus(), {"graded-u-nil-clean"},
                                   "graded-nil-good");
  REQUIRE(out.found);
  CHECK(out.instance_name == "M2(Z2)(e,g)/C2");
  // the serialized instance replays to the same verdict
  BuiltInstance built = build_document(out.instance);
  CHECK(is_graded_u_nil_clean(built.ring).holds);
  CHECK_FALSE(is_graded_nil_good(built.ring).holds);
}

TEST_CASE("unknown predicates raise") {
  CHECK_THROWS_AS(search_counterexample(small_corpus(), {"shiny"}, "graded-u-nil-clean"),
                  UnknownPredicate);
  CHECK_THROWS_AS(search_counterexample(small_corpus(), {}, "shiny"), UnknownPredicate);
}

TEST_CASE("replay reproduces a fresh counterexample and flags stale ones") {
  // fabricate a counterexample the way verify would serialize one
  const Corpus& c = small_corpus();
  const Instance* e3 = nullptr;
  for (const auto& i : c.items)
    if (i->name == "M2(Z2)(e,g)/C2") e3 = i.get();
  REQUIRE(e3 != nullptr);
  auto v = is_graded_nil_good(*e3->ring);
  REQUIRE_FALSE(v.holds);
  json doc{{"theorem", "manual"},
           {"property", "graded-nil-good"},
           {"observed_holds", false},
           {"instance", serialize_instance(*e3->ring)},
           {"element", *v.counterexample},
           {"note", "test"}};
  ReplayOutcome fresh = replay_counterexample(doc);
  CHECK(fresh.reproduced);
  // stale: claim the property held
  json stale = doc;
  stale["observed_holds"] = true;
  CHECK_FALSE(replay_counterexample(stale).reproduced);
  // corrupted: missing fields
  json broken = doc;
  broken.erase("instance");
  CHECK_THROWS_AS(replay_counterexample(broken), SchemaMismatch);
}

TEST_CASE("graded-nil ideal discovery on trivially graded Z_8") {
  GradedRing z8 = trivial_graded(FiniteRing::zmod(8), FiniteGroup::cyclic(2));
  auto ideals = discover_graded_nil_ideals(z8, 4);
  REQUIRE(!ideals.empty());
  CHECK(ideals.front().members.size() == 1);  // zero ideal first
  bool has24 = false;
  for (const auto& i : ideals) has24 = has24 || i.members.size() == 4;
  CHECK(has24);  // {0,2,4,6}
  for (const auto& i : ideals) CHECK(is_graded_nil(z8, i));
}

TEST_CASE("report text names every requested theorem") {
  Report rep = verify(small_corpus(), {"T_MAIN", "T_TN"}, 1);
  std::string text = rep.to_text();
  CHECK(text.find("T_MAIN") != std::string::npos);
  CHECK(text.find("T_TN") != std::string::npos);
  json j = rep.to_json(true);
  CHECK(j.contains("timing"));
  CHECK_FALSE(rep.to_json(false).contains("timing"));
}

TEST_CASE("predicate evaluation matches the deciders") {
  for (const auto& i : small_corpus().items) {
    if (i->ring->ring.order > 16) continue;
    CHECK(eval_predicate("graded-u-nil-clean", *i) == is_graded_u_nil_clean(*i->ring).holds);
    CHECK(eval_predicate("commutative", *i) == i->ring->ring.is_commutative());
  }
}
