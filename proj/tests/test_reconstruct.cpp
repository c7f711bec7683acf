#include <doctest.h>

#include "treedeck/deck.hpp"
#include "treedeck/reconstruct.hpp"

using namespace treedeck;

TEST_CASE("reconstruction numbers of small sizes") {
  CHECK(reconstruction_number(4, DeckMode::deck).value == 4);
  CHECK(reconstruction_number(5, DeckMode::deck).value == 5);
  CHECK(reconstruction_number(4, DeckMode::multideck).value == 4);
  CHECK(reconstruction_number(5, DeckMode::multideck).value == 4);
}

TEST_CASE("size-4 decks do not separate size-5 trees") {
  const auto r = decks_determine(5, 4, DeckMode::deck);
  CHECK_FALSE(r.determined);
  REQUIRE(r.witness);
  CHECK(r.witness->first < r.witness->second);
  CHECK(deck(r.witness->first, 4) == deck(r.witness->second, 4));
  CHECK(r.shapes == 3);
  CHECK(r.groups == 2);
}

TEST_CASE("one-less decks determine trees") {
  for (std::size_t n = 6; n <= 11; ++n) {
    const auto r = decks_determine(n, n - 1, DeckMode::deck);
    CHECK(r.determined);
    CHECK(r.groups == r.shapes);
    CHECK_FALSE(r.witness);
  }
}

TEST_CASE("determination does not depend on thread count") {
  const auto a = decks_determine(11, 6, DeckMode::deck, {}, Parallelism{1});
  const auto b = decks_determine(11, 6, DeckMode::deck, {}, Parallelism{3});
  CHECK(format_report(a) == format_report(b));
  CHECK(reconstruction_number(10, DeckMode::multideck, {}, Parallelism{1}).value ==
        reconstruction_number(10, DeckMode::multideck, {}, Parallelism{4}).value);
}

TEST_CASE("multidecks never need more than decks") {
  for (std::size_t n = 4; n <= 10; ++n)
    CHECK(reconstruction_number(n, DeckMode::multideck).value <=
          reconstruction_number(n, DeckMode::deck).value);
}

TEST_CASE("counterexample families") {
  for (std::size_t n = 5; n <= 32; ++n) {
    if (n == 7) continue;
    const auto f = counterexample_family(n);
    CAPTURE(n);
    CHECK(f.t1.size() == n);
    CHECK(f.t2.size() == n);
    CHECK(f.deck_size == 2 * ((n + 3) / 4));
    CHECK(f.residue == n % 4);
    CHECK(f.s.has_value() == (n != 5));
    const auto c = verify_counterexample(f);
    CHECK(c.valid);
    CHECK(c.trees_differ);
    CHECK(c.decks_equal);
    CHECK(c.multidecks_differ);
  }
  CHECK_THROWS_AS(counterexample_family(7), UnsupportedSize);
  CHECK_THROWS_AS(counterexample_family(3), UnsupportedSize);
}

TEST_CASE("a tampered family is rejected") {
  auto f = counterexample_family(12);
  f.t2 = caterpillar(12);
  const auto c = verify_counterexample(f);
  CHECK_FALSE(c.valid);
  CHECK_FALSE(c.decks_equal);
  CHECK(c.first_difference);

  auto same = counterexample_family(12);
  same.t2 = same.t1;
  CHECK_FALSE(verify_counterexample(same).valid);
}

TEST_CASE("report format") {
  const auto r = decks_determine(6, 5, DeckMode::multideck);
  const std::string text = format_report(r);
  CHECK(text.find("mode\tmultideck\n") != std::string::npos);
  CHECK(text.find("determined\tyes\n") != std::string::npos);
  CHECK_THROWS_AS(decks_determine(6, 7, DeckMode::deck), std::invalid_argument);
}
