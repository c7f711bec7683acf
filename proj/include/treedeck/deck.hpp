#pragma once

// Size-j decks and multidecks of tree shapes.
//
// Two routes compute the same multideck: a memoized recursion over the root
// split (multideck / deck) and a direct enumeration of leaf subsets
// (multideck_bruteforce). The subset route is the reference the recursion is
// tested against and stays part of the public API.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "treedeck/limits.hpp"
#include "treedeck/shape.hpp"

namespace treedeck {

using Count = boost::multiprecision::cpp_int;

Count binomial(std::size_t n, std::size_t k);

/// A set of shapes, all of one size, kept sorted in canonical order.
class Deck {
 public:
  explicit Deck(std::size_t size_class = 0) : size_class_(size_class) {}
  Deck(std::size_t size_class, std::vector<TreeShape> members);

  std::size_t size_class() const noexcept { return size_class_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const TreeShape& t) const;

  const std::vector<TreeShape>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const Deck&, const Deck&) = default;

 private:
  std::size_t size_class_;
  std::vector<TreeShape> members_;
};

/// Multiset of shapes of one size; every stored multiplicity is positive.
class MultiDeck {
 public:
  using Map = std::map<TreeShape, Count>;

  explicit MultiDeck(std::size_t size_class = 0) : size_class_(size_class) {}
  MultiDeck(std::size_t size_class, Map counts);

  std::size_t size_class() const noexcept { return size_class_; }
  const Map& counts() const noexcept { return counts_; }
  std::size_t distinct() const noexcept { return counts_.size(); }

  void add(const TreeShape& t, const Count& multiplicity);
  Count multiplicity(const TreeShape& t) const;
  Count total() const;
  Deck support() const;

  friend bool operator==(const MultiDeck&, const MultiDeck&) = default;

 private:
  std::size_t size_class_;
  Map counts_;
};

/// All decks D_1(T) .. D_n(T) and S(T) = sum of their cardinalities.
struct DeckProfile {
  std::vector<Deck> per_size;  // per_size[j - 1] is D_j(T)
  std::size_t subtree_count = 0;

  const Deck& at(std::size_t j) const { return per_size.at(j - 1); }
};

/// Raised by project_multideck when its input cannot be a genuine multideck.
class InconsistentMultiDeck : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// T[S] for leaves numbered 0..n-1 left to right in the canonical form
/// (first child before second child).
TreeShape induced_subtree(const TreeShape& t, std::span<const std::size_t> leaves);

/// Enumerates every j-subset of leaves. Refuses with InfeasibleError when
/// C(n, j) exceeds limits.max_bruteforce_subsets.
MultiDeck multideck_bruteforce(const TreeShape& t, std::size_t j, const Limits& limits = {});

/// Memoized split recursion. Keys are (canonical code, j), so repeated
/// subtrees are solved once. One calculator may serve many queries; it is
/// not thread-safe, use one per worker.
class DeckCalculator {
 public:
  const Deck& deck(const TreeShape& t, std::size_t j);
  const MultiDeck& multideck(const TreeShape& t, std::size_t j);
  DeckProfile profile(const TreeShape& t);

  void clear();

 private:
  template <typename V>
  using Memo = std::unordered_map<std::string, std::vector<std::optional<V>>>;

  Memo<Deck> decks_;
  Memo<MultiDeck> multidecks_;
};

MultiDeck multideck(const TreeShape& t, std::size_t j);
Deck deck(const TreeShape& t, std::size_t j);
DeckProfile deck_profile(const TreeShape& t);
std::size_t subtree_count(const TreeShape& t);

/// Recovers the size-i multideck of a size-n tree from its size-j multideck:
/// sum the size-i multidecks of the members, then divide by C(n-i, j-i).
MultiDeck project_multideck(const MultiDeck& d, std::size_t i, std::size_t n);

/// One "<text>" line per member in canonical order.
std::string format_deck(const Deck& d);
/// One "<text>\t<multiplicity>" line per member in canonical order.
std::string format_multideck(const MultiDeck& d);

std::ostream& operator<<(std::ostream& os, const Deck& d);
std::ostream& operator<<(std::ostream& os, const MultiDeck& d);

}  // namespace treedeck
