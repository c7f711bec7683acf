#include <doctest.h>

#include <algorithm>

#include "treedeck/deck.hpp"
#include "treedeck/enumerate.hpp"
#include "treedeck/extremal.hpp"

using namespace treedeck;

TEST_CASE("g formula") {
  CHECK(g(1) == 0);
  CHECK(g(2) == 1);
  CHECK(g(3) == 1);
  CHECK(g(5) == 2);
  CHECK(g(8) == 4);
  CHECK(g(9) == 5);
  CHECK(g(10) == 5);
  CHECK_THROWS_AS(g(0), std::invalid_argument);
}

TEST_CASE("maximum deck size") {
  const auto six = max_deck_bruteforce(6);
  CHECK(six.value == 3);
  CHECK(std::binary_search(six.achievers.begin(), six.achievers.end(), z_tree(6)));
  CHECK(max_deck_bruteforce(5).value == 2);
  for (std::size_t n = 1; n <= 13; ++n) {
    const auto r = max_deck_bruteforce(n);
    CAPTURE(n);
    CHECK(r.verified);
    CHECK(r.value == g(n));
    CHECK_FALSE(r.achievers.empty());
  }
  for (std::size_t n = 3; n <= 12; n += 3)
    for (const auto& a : max_deck_bruteforce(n).achievers) CHECK(root_split(a).contains(1));
}

TEST_CASE("achievers are exactly the shapes attaining the value") {
  const auto r = max_deck_bruteforce(9);
  for (const auto& t : all_shapes(9)) {
    const bool attains = deck(t, 8).size() == r.value;
    CHECK(attains == std::binary_search(r.achievers.begin(), r.achievers.end(), t));
    CHECK(deck(t, 8).size() <= r.value);
  }
}

TEST_CASE("minimum subtree count") {
  const auto four = min_subtrees_bruteforce(4);
  CHECK(four.value == 4);
  CHECK(four.achievers == std::vector<TreeShape>{caterpillar(4), complete(2)});
  const auto seven = min_subtrees_bruteforce(7);
  CHECK(seven.value == 7);
  CHECK(seven.achievers == std::vector<TreeShape>{caterpillar(7)});
  CHECK(min_subtrees_bruteforce(1).value == 1);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(min_subtrees_bruteforce(n).verified);
}

TEST_CASE("singleton decks are jellyfish") {
  const auto eight = singleton_deck_shapes(8);
  std::vector<TreeShape> want{caterpillar(8), jellyfish(1, 4), complete(3)};
  std::sort(want.begin(), want.end());
  CHECK(eight.achievers == want);
  CHECK(singleton_deck_shapes(7).achievers == std::vector<TreeShape>{caterpillar(7)});
  std::vector<TreeShape> four{caterpillar(4), complete(2)};
  std::sort(four.begin(), four.end());
  CHECK(singleton_deck_shapes(4).achievers == four);
  for (std::size_t n = 2; n <= 12; ++n) CHECK(singleton_deck_shapes(n).verified);
  CHECK_THROWS_AS(singleton_deck_shapes(1), std::invalid_argument);
}

TEST_CASE("smaller singleton decks force a caterpillar") {
  for (std::size_t n = 7; n <= 11; ++n) CHECK(singleton_jdeck_check(n));
  CHECK(deck(jellyfish(1, 4), 6).size() >= 2);
  for (std::size_t k = 1; k <= 10; ++k) CHECK(deck(caterpillar(10), k).size() == 1);
  CHECK_THROWS_AS(singleton_jdeck_check(4), std::invalid_argument);
}

TEST_CASE("size-4 decks of non-caterpillars hold both size-4 shapes") {
  for (std::size_t n = 5; n <= 10; ++n)
    for (const auto& t : all_shapes(n)) {
      if (t == caterpillar(n)) continue;
      const Deck d = deck(t, 4);
      CHECK(d.contains(caterpillar(4)));
      CHECK(d.size() == 2);
    }
}

TEST_CASE("subtree count bounds") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& t : all_shapes(n)) {
      const std::size_t s = subtree_count(t);
      CHECK(s >= n);
      if (s == n) CHECK((t == caterpillar(n) || t == complete(2)));
    }
}

TEST_CASE("X and Y trees") {
  CHECK(s_y_closed_form(6) == 9);
  CHECK(s_y_closed_form(10) == 41);
  CHECK(s_y_closed_form(14) == 201);
  CHECK(Count(subtree_count(y_tree(14))) == s_y_closed_form(14));
  CHECK(Count(subtree_count(y_tree(18))) == s_y_closed_form(18));
  CHECK_THROWS_AS(s_y_closed_form(8), std::invalid_argument);
  CHECK_THROWS_AS(s_y_closed_form(2), std::invalid_argument);
  CHECK(verify_xy_recurrences(5));
  CHECK(verify_xy_recurrences(9));
  CHECK(verify_xy_recurrences(13));
  CHECK_THROWS_AS(verify_xy_recurrences(7), std::invalid_argument);
  for (std::size_t m = 6; m <= 42; m += 4) CHECK(s_y_from_recurrence(m, 9, 41) == s_y_closed_form(m));
}

TEST_CASE("exhaustive sweeps refuse large sizes") {
  Limits tight;
  tight.max_exhaustive_size = 8;
  CHECK_THROWS_AS(max_deck_bruteforce(9, tight), InfeasibleError);
  CHECK_THROWS_AS(min_subtrees_bruteforce(9, tight), InfeasibleError);
  CHECK_THROWS_AS(singleton_jdeck_check(9, tight), InfeasibleError);
}

TEST_CASE("sweeps agree across thread counts") {
  CHECK(format_report(max_deck_bruteforce(12, {}, Parallelism{1})) ==
        format_report(max_deck_bruteforce(12, {}, Parallelism{3})));
}
