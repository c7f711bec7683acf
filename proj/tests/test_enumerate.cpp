#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "treedeck/enumerate.hpp"

using namespace treedeck;

TEST_CASE("Wedderburn-Etherington numbers") {
  const std::vector<long> known = {1,    1,     1,     2,      3,      6,      11,     23,
                                   46,   98,    207,   451,    983,    2179,   4850,   10905,
                                   24631, 56011, 127912, 293547, 676157, 1563372};
  for (std::size_t n = 1; n <= known.size(); ++n) CHECK(wedderburn(n) == known[n - 1]);
  CHECK_THROWS_AS(wedderburn(0), std::invalid_argument);
}

TEST_CASE("enumeration counts match the recurrence") {
  for (std::size_t n = 1; n <= 15; ++n) CHECK(Count(all_shapes(n).count()) == wedderburn(n));
}

TEST_CASE("enumeration is sorted, sized and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto& shapes = all_shapes(n).shapes();
    CHECK(std::is_sorted(shapes.begin(), shapes.end()));
    std::mt19937_64 rng(n);
    std::vector<oracle::RawTree> raws;
    for (const auto& t : shapes) {
      CHECK(t.size() == n);
      raws.push_back(oracle::scramble(t, rng));
    }
    for (std::size_t a = 0; a < raws.size(); ++a)
      for (std::size_t b = a + 1; b < raws.size(); ++b) CHECK_FALSE(oracle::isomorphic(raws[a], raws[b]));
  }
}

TEST_CASE("every random shape is listed") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 14)(rng);
    const TreeShape t = oracle::to_shape(oracle::random_raw(n, rng));
    const auto& shapes = all_shapes(static_cast<std::size_t>(n)).shapes();
    CHECK(std::binary_search(shapes.begin(), shapes.end(), t));
  }
}

TEST_CASE("enumeration ceiling") {
  Limits tight;
  tight.max_enumeration_size = 10;
  CHECK_THROWS_AS(all_shapes(11, tight), InfeasibleError);
  CHECK_NOTHROW(all_shapes(10, tight));
  CHECK_THROWS_AS(all_shapes(0), std::invalid_argument);
}
