#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "treedeck/deck.hpp"
#include "treedeck/enumerate.hpp"

using namespace treedeck;

namespace {

TreeShape j(const TreeShape& a, const TreeShape& b) { return TreeShape::join(a, b); }

// Compares a multideck with the oracle's isomorphism classes.
bool matches_oracle(const MultiDeck& d, const std::vector<oracle::Class>& classes,
                    std::mt19937_64& rng) {
  if (d.distinct() != classes.size()) return false;
  for (const auto& [shape, count] : d.counts()) {
    const auto raw = oracle::scramble(shape, rng);
    bool found = false;
    for (const auto& c : classes)
      if (oracle::isomorphic(c.representative, raw)) {
        found = true;
        if (Count(c.count) != count) return false;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == Count("118264581564861424"));
}

TEST_CASE("caterpillar decks are single caterpillars") {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const Deck d = deck(caterpillar(n), k);
      REQUIRE(d.size() == 1);
      CHECK(d.contains(caterpillar(k)));
    }
}

TEST_CASE("multideck totals and support") {
  for (std::size_t n = 1; n <= 9; ++n) {
    DeckCalculator calc;
    for (const auto& t : all_shapes(n))
      for (std::size_t k = 1; k <= n; ++k) {
        const MultiDeck& m = calc.multideck(t, k);
        CHECK(m.total() == binomial(n, k));
        CHECK(m.support() == calc.deck(t, k));
      }
  }
}

TEST_CASE("recursion matches the graph oracle on random shapes") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const auto raw = oracle::random_raw(n, rng);
    const TreeShape t = oracle::to_shape(raw);
    for (int k = 1; k <= n; ++k) CHECK(matches_oracle(multideck(t, k), oracle::multideck(raw, k), rng));
  }
}

TEST_CASE("recursion matches subset enumeration on all small shapes") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& t : all_shapes(n))
      for (std::size_t k = 1; k <= n; ++k) CHECK(multideck(t, k) == multideck_bruteforce(t, k));
}

TEST_CASE("induced subtree by leaf index") {
  const TreeShape t = j(j(caterpillar(3), caterpillar(2)), TreeShape());  // leaves 0..5
  const std::vector<std::size_t> cherry{3, 4};
  CHECK(induced_subtree(t, cherry) == caterpillar(2));
  const std::vector<std::size_t> b2{1, 2, 3, 4};
  CHECK(induced_subtree(t, b2) == complete(2));
  const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
  CHECK(induced_subtree(t, all) == t);
  CHECK_THROWS_AS(induced_subtree(t, std::vector<std::size_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subtree(t, std::vector<std::size_t>{6}), std::out_of_range);
}

TEST_CASE("induced subtree agrees with the graph oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 14)(rng);
    const TreeShape t = oracle::to_shape(oracle::random_raw(n, rng));
    // The canonical drawing keeps first-child leaves before second-child ones.
    oracle::RawTree raw;
    std::mt19937_64 fixed(0);
    auto copy = [&](auto&& self, const TreeShape& s) -> int {
      if (s.is_leaf()) return oracle::add_node(raw);
      const int a = self(self, s.first());
      const int b = self(self, s.second());
      return oracle::add_node(raw, a, b);
    };
    raw.root = copy(copy, t);
    const auto leaves = raw.leaf_nodes();
    std::vector<std::size_t> pick;
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (rng() % 2 || (i == n - 1 && pick.empty())) {
        pick.push_back(i);
        nodes.push_back(leaves[i]);
      }
    CHECK(induced_subtree(t, pick) == oracle::to_shape(oracle::induced(raw, nodes)));
  }
}

TEST_CASE("subset enumeration refuses oversized requests") {
  Limits tight;
  tight.max_bruteforce_subsets = 100;
  CHECK_THROWS_AS(multideck_bruteforce(caterpillar(12), 6, tight), InfeasibleError);
  try {
    multideck_bruteforce(caterpillar(12), 6, tight);
  } catch (const InfeasibleError& e) {
    CHECK(e.estimate() == doctest::Approx(924));
  }
  CHECK_THROWS_AS(multideck_bruteforce(caterpillar(4), 5), std::invalid_argument);
}

TEST_CASE("decks grow with supertrees") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 14)(rng);
    const TreeShape t = oracle::to_shape(oracle::random_raw(n, rng));
    const Deck below = deck(t, static_cast<std::size_t>(n - 1));
    const TreeShape s = below.members()[rng() % below.size()];
    for (std::size_t k = 1; k < s.size(); ++k)
      for (const auto& m : deck(s, k)) CHECK(deck(t, k).contains(m));
  }
}

TEST_CASE("projection recovers smaller multidecks") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 14)(rng);
    const TreeShape t = oracle::to_shape(oracle::random_raw(static_cast<int>(n), rng));
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, n)(rng);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(1, k - 1)(rng);
    CHECK(project_multideck(multideck(t, k), i, n) == multideck(t, i));
  }
}

TEST_CASE("projection rejects inconsistent input") {
  MultiDeck short_total(4);
  short_total.add(caterpillar(4), 3);
  CHECK_THROWS_AS(project_multideck(short_total, 2, 5), InconsistentMultiDeck);

  // Right total for n = 6 but not a real multideck: the summed C_4 count is odd.
  MultiDeck fake(5);
  fake.add(caterpillar(5), 5);
  fake.add(TreeShape::join(complete(2), TreeShape()), 1);
  CHECK_THROWS_AS(project_multideck(fake, 4, 6), InconsistentMultiDeck);
  CHECK_THROWS_AS(project_multideck(fake, 5, 6), std::invalid_argument);
}

TEST_CASE("deck and multideck validation and formatting") {
  CHECK_THROWS_AS(Deck(3, {caterpillar(4)}), std::invalid_argument);
  MultiDeck m(2);
  CHECK_THROWS_AS(m.add(caterpillar(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(m.add(caterpillar(2), -1), std::invalid_argument);
  m.add(caterpillar(2), 0);
  CHECK(m.distinct() == 0);

  const TreeShape t = j(complete(2), TreeShape());
  CHECK(format_deck(deck(t, 4)) == "(*,(*,(*,*)))\n((*,*),(*,*))\n");
  CHECK(format_multideck(multideck(t, 4)) == "(*,(*,(*,*)))\t4\n((*,*),(*,*))\t1\n");
  CHECK_THROWS_AS(deck(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(deck(t, 6), std::invalid_argument);
}

TEST_CASE("subtree counts") {
  CHECK(subtree_count(caterpillar(9)) == 9);
  CHECK(subtree_count(complete(2)) == 4);
  CHECK(deck_profile(complete(2)).at(3) == Deck(3, {caterpillar(3)}));
}
