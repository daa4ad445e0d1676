#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "helpers.hpp"
#include "prefrev/relation.hpp"

using namespace prefrev;
using testing::rel;

TEST_CASE("insert, contains and erase") {
  Relation r(3);
  CHECK(r.empty());
  r.insert(0, 1);
  r.insert(Comparison{2, 0});
  CHECK(r.contains(0, 1));
  CHECK(r.contains(Comparison{2, 0}));
  CHECK_FALSE(r.contains(1, 0));
  CHECK(r.size() == 2);
  r.erase(0, 1);
  CHECK_FALSE(r.contains(0, 1));
  CHECK(r.size() == 1);
}

TEST_CASE("items outside the universe are rejected") {
  Relation r(3);
  CHECK_THROWS_AS(r.insert(0, 3), InvalidInput);
  CHECK_THROWS_AS(r.set_row(1, 0b1000), InvalidInput);
  CHECK_FALSE(r.contains(5, 0));
  CHECK_THROWS_AS(Relation(kMaxItems + 1), InvalidInput);
  CHECK_THROWS_AS(validate_universe(0), InvalidInput);
}

TEST_CASE("set operations need a common universe") {
  const Relation a = rel(3, "(1,2),(2,3)");
  const Relation b = rel(3, "(2,3),(3,1)");
  CHECK((a | b) == rel(3, "(1,2),(2,3),(3,1)"));
  CHECK((a - b) == rel(3, "(1,2)"));
  CHECK((a & b) == rel(3, "(2,3)"));
  CHECK_THROWS_AS(a | Relation(4), InvalidInput);
  CHECK(rel(3, "(1,2)").subset_of(a));
  CHECK_FALSE(b.subset_of(a));
}

TEST_CASE("self pairs, converse and sorted listing") {
  Relation r = rel(3, "(2,1),(1,1),(1,3)");
  CHECK(r.has_self_pair());
  CHECK_FALSE(r.without_self_pairs().has_self_pair());
  CHECK(r.converse() == rel(3, "(1,2),(1,1),(3,1)"));
  const auto pairs = r.pairs();
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == Comparison{0, 0});
  CHECK(pairs[1] == Comparison{0, 2});
  CHECK(pairs[2] == Comparison{1, 0});
}

TEST_CASE("hash agrees with equality") {
  std::unordered_set<Relation, RelationHash> seen;
  seen.insert(rel(3, "(1,2)"));
  seen.insert(rel(3, "(1,2)"));
  seen.insert(rel(4, "(1,2)"));
  CHECK(seen.size() == 2);
}

TEST_CASE("format and parse round-trip") {
  const Relation r = rel(4, "{(3,1), (1,2) ,(4,2)}");
  CHECK(format_relation(r) == "{(1,2),(3,1),(4,2)}");
  CHECK(parse_relation(format_relation(r), 4) == r);
  const Labels labels = {"a", "b", "c"};
  const Relation s = parse_relation("(c,a),(a,b)", 3, labels);
  CHECK(format_relation(s, labels) == "{(a,b),(c,a)}");
  CHECK(parse_relation(format_relation(s, labels), 3, labels) == s);
  CHECK_THROWS_AS(parse_relation("(1,5)", 4), InvalidInput);
  CHECK_THROWS_AS(parse_relation("(1,2", 4), InvalidInput);
  CHECK_THROWS_AS(parse_relation("(1,2,3)", 4), InvalidInput);
  CHECK_THROWS_AS(parse_relation("(a,z)", 3, labels), InvalidInput);
  CHECK(parse_relation("{}", 2).empty());
}
