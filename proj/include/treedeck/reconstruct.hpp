#pragma once

// Deck reconstruction experiments: do the size-j (multi)decks tell all
// size-n shapes apart, and the explicit colliding families.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "treedeck/deck.hpp"
#include "treedeck/limits.hpp"
#include "treedeck/shape.hpp"

namespace treedeck {

enum class DeckMode { deck, multideck };

const char* to_string(DeckMode mode) noexcept;

struct DeterminationReport {
  std::size_t n = 0;
  std::size_t j = 0;
  DeckMode mode = DeckMode::deck;
  bool determined = false;
  /// Least colliding pair (first < second in canonical order); set iff !determined.
  std::optional<std::pair<TreeShape, TreeShape>> witness;
  std::size_t shapes = 0;
  std::size_t groups = 0;
};

struct ReconstructionNumber {
  std::size_t n = 0;
  std::size_t value = 0;
  DeckMode mode = DeckMode::deck;
};

/// Groups every size-n shape by its size-j (multi)deck fingerprint.
DeterminationReport decks_determine(std::size_t n, std::size_t j, DeckMode mode,
                                    const Limits& limits = {}, Parallelism par = {});

/// Smallest j whose (multi)decks determine the size-n shapes. Sweeps j down
/// from n - 1 and stops at the first failure; determination is monotone in j.
ReconstructionNumber reconstruction_number(std::size_t n, DeckMode mode,
                                           const Limits& limits = {}, Parallelism par = {});

class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two distinct size-n shapes built from caterpillars hung off B_2 whose
/// size-2k decks coincide, k = ceil(n/4), plus a common induced subtree S
/// with the same size-2k deck. S is absent only for n = 5.
struct CounterexampleFamily {
  std::size_t n = 0;
  std::size_t residue = 0;  // n mod 4
  std::size_t k = 0;
  TreeShape t1;
  TreeShape t2;
  std::optional<TreeShape> s;
  std::size_t deck_size = 0;  // 2k
};

CounterexampleFamily counterexample_family(std::size_t n);

struct CounterexampleCheck {
  bool valid = false;
  bool trees_differ = false;
  bool decks_equal = false;
  bool s_is_subtree = false;
  bool multidecks_differ = false;
  /// Least shape lying in one of the compared decks but not another.
  std::optional<TreeShape> first_difference;
};

/// valid iff T1 != T2, D_2k(T1) = D_2k(S) = D_2k(T2), S is an induced
/// subtree of both, and the size-2k multidecks of T1 and T2 differ.
CounterexampleCheck verify_counterexample(const CounterexampleFamily& f);

std::string format_report(const DeterminationReport& r);

}  // namespace treedeck
