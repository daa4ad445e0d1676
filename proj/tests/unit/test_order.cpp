#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "prefrev/order.hpp"

using namespace prefrev;
using testing::chain;
using testing::rel;

namespace {

// Closure by repeated squaring of the boolean adjacency matrix.
Relation closure_by_squaring(const Relation& r) {
  const std::size_t n = r.universe();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (Item a = 0; a < n; ++a)
    for (Item b = 0; b < n; ++b) m[a][b] = r.contains(a, b);
  for (std::size_t round = 0; round < n; ++round) {
    auto next = m;
    for (Item a = 0; a < n; ++a)
      for (Item b = 0; b < n; ++b)
        for (Item c = 0; c < n; ++c)
          if (m[a][b] && m[b][c]) next[a][c] = true;
    m = next;
  }
  Relation out(n);
  for (Item a = 0; a < n; ++a)
    for (Item b = 0; b < n; ++b)
      if (m[a][b]) out.insert(a, b);
  return out;
}

}  // namespace

TEST_CASE("transitive closure") {
  CHECK(transitive_closure(rel(3, "(1,2),(2,3)")) == rel(3, "(1,2),(2,3),(1,3)"));
  CHECK(transitive_closure(Relation(3)).empty());
  CHECK(transitive_closure(rel(2, "(1,2),(2,1)")) == rel(2, "(1,2),(2,1),(1,1),(2,2)"));
}

TEST_CASE("closure matches matrix squaring on random relations") {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution edge(0.2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 9;
    Relation r(n);
    for (Item a = 0; a < n; ++a)
      for (Item b = 0; b < n; ++b)
        if (edge(rng)) r.insert(a, b);
    CHECK(transitive_closure(r) == closure_by_squaring(r));
  }
}

TEST_CASE("strict partial order test") {
  CHECK(is_spo(rel(3, "(1,2),(2,3),(1,3)")));
  CHECK_FALSE(is_spo(rel(3, "(1,2),(2,3)")));
  CHECK_FALSE(is_spo(rel(3, "(1,1)")));
  CHECK(is_spo(Relation(2)));
  CHECK_THROWS_AS(require_spo(rel(2, "(1,2),(2,1)"), "sigma"), InvalidInput);
}

TEST_CASE("chains") {
  const Chain c = chain({1, 2, 3});
  CHECK(c.relation() == rel(3, "(1,2),(2,3),(1,3)"));
  CHECK(c.comparison_count() == 2);
  CHECK(chain({1}).relation().empty());
  CHECK(chain({1}).comparison_count() == 0);
  const auto dir = direct_comparisons(chain({1, 2, 3, 4}));
  REQUIRE(dir.size() == 3);
  CHECK(dir[2] == Comparison{2, 3});
  CHECK(direct_relation(c) == rel(3, "(1,2),(2,3)"));
  CHECK(direct_comparisons(chain({1})).empty());
  CHECK_THROWS_AS(Chain::from_sequence(3, {0, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(Chain::from_sequence(3, {0, 3}), InvalidInput);
  CHECK(chain(4, {4, 2}).relation() == rel(4, "(4,2)"));
}

TEST_CASE("union closure exposes cycles as self pairs") {
  const Chain c = chain({1, 2, 3});
  const Relation u = union_plus(c.relation(), rel(3, "(3,1)"));
  CHECK(u.contains(0, 0));
  CHECK(u.contains(1, 1));
  CHECK(u.contains(2, 2));
  const Relation r = rel(3, "(1,2),(2,3)");
  CHECK(union_plus(r, Relation(3)) == transitive_closure(r));
  const Relation four = union_plus(chain({1, 2, 3, 4}).relation(), rel(4, "(3,1)"));
  CHECK(four.contains(2, 3));
  CHECK(four.contains(0, 3));
  CHECK_FALSE(four.contains(3, 0));
  CHECK_FALSE(four.contains(3, 3));
}

TEST_CASE("cycle-free and cyclic parts") {
  CHECK(cycle_free_part(chain({1, 2, 3}), rel(3, "(3,1)")).empty());
  // Only direct comparisons count: (1,4) and (2,4) are inferred, not direct.
  CHECK(cycle_free_part(chain({1, 2, 3, 4}), rel(4, "(3,1)")) == rel(4, "(3,4)"));
  CHECK(cycle_free_part(chain({1, 2}), Relation(2)) == rel(2, "(1,2)"));

  CHECK(cyclic_part(chain({1, 2, 3}), rel(3, "(3,1)")) == rel(3, "(1,2),(2,3)"));
  CHECK(cyclic_part(chain({1, 2, 3, 4}), rel(4, "(4,1)")) == rel(4, "(1,2),(2,3),(3,4)"));
  CHECK(cyclic_part(chain({1, 2, 3, 4}), Relation(4)).empty());
  CHECK(cyclic_indices(chain({1, 2, 3, 4}), rel(4, "(3,1)")) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("cycle-free and cyclic parts split the direct comparisons") {
  const Chain c = chain({2, 4, 1, 3});
  for (const char* text : {"", "(3,2)", "(1,4),(3,4)", "(4,2),(3,1)", "(3,2),(1,2),(3,4),(1,4)"}) {
    const Relation sigma = transitive_closure(rel(4, text));
    const Relation cf = cycle_free_part(c, sigma);
    const Relation cyc = cyclic_part(c, sigma);
    CHECK((cf & cyc).empty());
    CHECK((cf | cyc) == direct_relation(c));
    if (is_spo(union_plus(c.relation(), sigma))) {
      CHECK(cyc.empty());
      CHECK(union_plus(sigma, cf) == union_plus(c.relation(), sigma));
    }
  }
}

TEST_CASE("completions") {
  const Chain c = chain({1, 2, 3});
  const auto all = completions(c, rel(3, "(3,1)"));
  std::vector<Relation> expected = {rel(3, "(3,1),(1,2),(3,2)"), rel(3, "(2,3),(3,1),(2,1)"),
                                    rel(3, "(3,1)")};
  std::sort(expected.begin(), expected.end());
  CHECK(all == expected);
  CHECK(completions(chain({1}), Relation(1)) == std::vector<Relation>{Relation(1)});
  CHECK(completions(chain({1, 2, 3, 4}), rel(4, "(3,1)")).size() == 6);

  const auto decisive = decisive_completions(c, rel(3, "(3,1)"));
  CHECK(decisive.size() == 2);
  CHECK(std::find(decisive.begin(), decisive.end(), rel(3, "(3,1)")) == decisive.end());
  CHECK(decisive_completions(chain({1, 2}), rel(2, "(2,1)")).empty());
  CHECK(decisive_completions(chain({1, 2}), Relation(2)) == std::vector<Relation>{rel(2, "(1,2)")});

  CHECK_THROWS_AS(completions(c, rel(3, "(1,2),(2,1)")), InvalidInput);
  Limits tight;
  tight.max_enumerated_comparisons = 1;
  CHECK_THROWS_AS(completions(c, rel(3, "(3,1)"), tight), GuardExceeded);
}
