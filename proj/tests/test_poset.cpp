/**
 * Tests for poset construction, multichain enumeration and automorphism
 * validation. Expected counts marked as derived were computed with the
 * brute-force enumerators in support/oracles.hpp.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewder/poset.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace skewder;
namespace st = skewder::testing;

namespace {

Poset two_crown() {
  return poset_from_covers({"1", "2", "3", "4"},
                           {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
}

Poset v_poset() {
  return poset_from_covers({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}});
}

Poset chain(int n) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  for (int i = 1; i <= n; ++i) elements.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    relations.emplace_back(std::to_string(i), std::to_string(i + 1));
  return poset_from_covers(elements, relations);
}

Poset four_crown_with_bottom() {
  std::vector<std::string> elements{"0", "1", "2", "3", "4", "5", "6", "7", "8"};
  std::vector<std::pair<std::string, std::string>> relations{
      {"1", "5"}, {"2", "5"}, {"2", "6"}, {"3", "6"},
      {"3", "7"}, {"4", "7"}, {"4", "8"}, {"1", "8"}};
  for (int i = 1; i <= 8; ++i) relations.emplace_back("0", std::to_string(i));
  return poset_from_covers(elements, relations);
}

}  // namespace

TEST_CASE("two-crown poset has eight comparable pairs", "[poset]") {
  const Poset p = two_crown();
  REQUIRE(p.size() == 4);
  REQUIRE(p.pair_count() == 8);
  REQUIRE(p.cover_pairs().size() == 4);
  REQUIRE(p.leq(p.index_of("1"), p.index_of("3")));
  REQUIRE_FALSE(p.leq(p.index_of("1"), p.index_of("2")));
}

TEST_CASE("singleton poset is reflexive only", "[poset]") {
  const Poset p = poset_from_covers({"1"}, {});
  REQUIRE(p.pair_count() == 1);
  REQUIRE(p.leq(0, 0));
  REQUIRE(p.cover_pairs().empty());
}

TEST_CASE("closure adds forced relations", "[poset]") {
  const Poset p = chain(3);
  REQUIRE(p.leq(p.index_of("1"), p.index_of("3")));
  // (1,3) is implied, not a cover.
  REQUIRE(p.cover_pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("closure is idempotent", "[poset][property]") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = st::random_poset(rng);
    // Re-close using the full relation set; everything must be unchanged.
    std::vector<std::pair<std::string, std::string>> relations;
    for (const auto& [a, b] : p->comparable_pairs())
      relations.emplace_back(p->token(a), p->token(b));
    const Poset q = poset_from_covers(p->elements(), relations);
    REQUIRE(q.comparable_pairs() == p->comparable_pairs());
    REQUIRE(q.cover_pairs() == p->cover_pairs());
  }
}

TEST_CASE("cycles and unknown elements are rejected", "[poset]") {
  REQUIRE_THROWS_AS(
      poset_from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
  REQUIRE_THROWS_AS(
      poset_from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
      CycleError);
  REQUIRE_THROWS_AS(poset_from_covers({"a"}, {{"a", "z"}}),
                    UnknownElementError);
  // Self-loops are just reflexivity, not cycles.
  REQUIRE_NOTHROW(poset_from_covers({"a"}, {{"a", "a"}}));
}

TEST_CASE("multichains of the 2-chain in lexicographic order", "[poset]") {
  const Poset p = chain(2);
  REQUIRE(multichains(p, 1) ==
          std::vector<Multichain>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("multichain counts on the paper posets", "[poset]") {
  REQUIRE(multichains(two_crown(), 1).size() == 8);
  // Brute-force enumeration gives 7 weak 3-chains on the V poset and 10
  // on the 3-chain.
  const Poset v = v_poset();
  REQUIRE(st::brute_force_multichains(v, 2).size() == 7);
  REQUIRE(multichains(v, 2).size() == 7);
  const Poset c3 = chain(3);
  REQUIRE(st::brute_force_multichains(c3, 2).size() == 10);
  REQUIRE(multichains(c3, 2).size() == 10);
}

TEST_CASE("multichains match brute force and the composition formula",
          "[poset][property]") {
  std::mt19937_64 rng(733);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = st::random_poset(rng);
    for (int n = 0; n <= 3; ++n) {
      const auto fast = multichains(*p, n);
      const auto slow = st::brute_force_multichains(*p, n);
      REQUIRE(fast == slow);  // same tuples, same lexicographic order
      REQUIRE(fast.size() == st::multichain_count_formula(*p, n));
    }
  }
}

TEST_CASE("automorphism validation accepts the paper maps", "[poset]") {
  const auto crown = two_crown();
  REQUIRE_NOTHROW(validate_automorphism(
      crown, {{"1", "2"}, {"2", "1"}, {"3", "4"}, {"4", "3"}}));
  const auto v = v_poset();
  REQUIRE_NOTHROW(
      validate_automorphism(v, {{"1", "1"}, {"2", "3"}, {"3", "2"}}));
}

TEST_CASE("automorphism validation rejects bad maps", "[poset]") {
  const Poset p = chain(2);
  try {
    validate_automorphism(p, {{"1", "2"}, {"2", "1"}});
    FAIL("expected NotOrderPreservingError");
  } catch (const NotOrderPreservingError& e) {
    REQUIRE(e.first == "1");
    REQUIRE(e.second == "2");
  }
  REQUIRE_THROWS_AS(validate_automorphism(p, {{"1", "1"}, {"2", "1"}}),
                    NotBijectiveError);
  REQUIRE_THROWS_AS(validate_automorphism(p, std::vector<int>{0}),
                    NotBijectiveError);
}

TEST_CASE("validated automorphisms have no strict movement", "[poset][property]") {
  // lam(x) <= x forces lam(x) = x on finite posets; checked exhaustively
  // over every automorphism of sampled posets.
  std::mt19937_64 rng(911);
  for (int trial = 0; trial < 15; ++trial) {
    const auto p = st::random_poset(rng);
    for (const auto& lam : st::all_automorphisms(*p))
      for (int x = 0; x < p->size(); ++x) {
        REQUIRE(p->leq(lam.apply(x), x) == p->leq(x, lam.apply(x)));
        REQUIRE(p->leq(lam.apply(x), x) == (lam.apply(x) == x));
      }
  }
}

TEST_CASE("all-comparable elements", "[poset]") {
  REQUIRE(all_comparable_elements(chain(3)) == std::vector<int>{0, 1, 2});
  REQUIRE(all_comparable_elements(two_crown()).empty());
  const Poset p = four_crown_with_bottom();
  REQUIRE(all_comparable_elements(p) == std::vector<int>{p.index_of("0")});
}

TEST_CASE("vanishing condition on the paper examples", "[poset]") {
  const Poset c = chain(3);
  REQUIRE(check_vanishing_condition(c, PosetAutomorphism::identity(3), 0));

  const Poset v = v_poset();
  const auto swap23 =
      validate_automorphism(v, {{"1", "1"}, {"2", "3"}, {"3", "2"}});
  REQUIRE_FALSE(check_vanishing_condition(v, swap23, v.index_of("1")));
  REQUIRE_THROWS_AS(check_vanishing_condition(v, swap23, v.index_of("2")),
                    NotAllComparableError);

  const Poset fc = four_crown_with_bottom();
  const auto lam = validate_automorphism(
      fc, {{"0", "0"}, {"1", "3"}, {"2", "4"}, {"3", "1"}, {"4", "2"},
           {"5", "7"}, {"6", "8"}, {"7", "5"}, {"8", "6"}});
  REQUIRE_FALSE(check_vanishing_condition(fc, lam, fc.index_of("0")));
}

TEST_CASE("poset length", "[poset]") {
  REQUIRE(poset_length(poset_from_covers({"1"}, {})) == 0);
  REQUIRE(poset_length(two_crown()) == 1);
  REQUIRE(poset_length(chain(3)) == 2);
}
