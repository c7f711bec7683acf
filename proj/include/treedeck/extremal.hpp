#pragma once

// Extremal deck cardinalities: closed forms and exhaustive checks of the
// shapes that attain them.

#include <cstddef>
#include <string>
#include <vector>

#include "treedeck/deck.hpp"
#include "treedeck/limits.hpp"
#include "treedeck/shape.hpp"

namespace treedeck {

enum class Quantity { max_deck, min_subtrees, singleton_deck };

const char* to_string(Quantity q) noexcept;

struct ExtremalReport {
  std::size_t n = 0;
  Quantity quantity = Quantity::max_deck;
  std::size_t value = 0;
  std::vector<TreeShape> achievers;  // canonical order
  /// Whether the search agrees with the closed-form characterization.
  bool verified = false;
  std::vector<std::string> failures;
};

/// Largest possible |D_{n-1}(T)| over size-n shapes.
std::size_t g(std::size_t n);

/// S(Y_m) = 1 + 8 * 5^((m-6)/4) for m = 2 (mod 4), m >= 6.
Count s_y_closed_form(std::size_t m);

/// max |D_{n-1}(T)|; verified iff value = g(n), Z_n attains it, and for
/// 3 | n every achiever has root split {1, n-1}.
ExtremalReport max_deck_bruteforce(std::size_t n, const Limits& limits = {}, Parallelism par = {});

/// min S(T); verified iff value = n and achievers are {C_n} (plus B_2 at n = 4).
ExtremalReport min_subtrees_bruteforce(std::size_t n, const Limits& limits = {},
                                       Parallelism par = {});

/// Shapes with |D_{n-1}(T)| = 1; verified iff they are exactly the
/// jellyfish J_{k,l} with 2^k * l = n.
ExtremalReport singleton_deck_shapes(std::size_t n, const Limits& limits = {},
                                     Parallelism par = {});

/// Jellyfish J_{k,l} over all factorizations n = 2^k * l with l >= 2.
std::vector<TreeShape> jellyfish_of_size(std::size_t n);

/// For every size-n shape and 4 <= j <= n-2: |D_j(T)| = 1 implies T = C_n.
bool singleton_jdeck_check(std::size_t n, const Limits& limits = {}, Parallelism par = {});

/// Subtree-count recurrences linking X and Y trees, for n = 1 (mod 4), n >= 5:
///   S(Y_{n+5}) = 2 S(X_{n+4}) - S(Y_{n+1})
///   S(X_{n+8}) = 4 S(Y_{n+5}) - S(X_{n+4}) - 2 S(Y_{n+1})
bool verify_xy_recurrences(std::size_t n);

/// Closed form obtained by solving the recurrences from S(Y_6), S(Y_10).
Count s_y_from_recurrence(std::size_t m, const Count& s_y6, const Count& s_y10);

std::string format_report(const ExtremalReport& r);

}  // namespace treedeck
