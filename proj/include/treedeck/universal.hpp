#pragma once

// k-universal shapes: trees whose size-k deck holds every size-k shape.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treedeck/limits.hpp"
#include "treedeck/shape.hpp"

namespace treedeck {

/// |D_k(T)| == W_k. For k > size(T) the answer is false and, when given,
/// *k_exceeds_size is set.
bool is_universal(const TreeShape& t, std::size_t k, bool* k_exceeds_size = nullptr);

struct SearchOptions {
  /// Largest tree size to scan; 0 means no ceiling.
  std::size_t max_size = 0;
  /// Wall-clock budget in seconds; 0 means unlimited.
  double budget_seconds = 0;
  /// Append-only checkpoint log; empty disables caching.
  std::string cache_path;
  /// Without a budget, k >= this threshold only verifies the known upper
  /// bound instead of searching.
  std::size_t exhaustive_k_limit = 11;
  Parallelism parallelism;
};

struct SearchCertificate {
  std::size_t k = 0;
  /// u(k) when exhaustive, otherwise a verified upper bound.
  std::size_t u_value = 0;
  /// All minimal witnesses in canonical order when exhaustive; otherwise the
  /// tree backing the upper bound.
  std::vector<TreeShape> witnesses;
  /// Shapes whose size-k deck was evaluated in the final sweep of each size.
  std::uint64_t explored = 0;
  /// Final-sweep shapes answered from the cache instead.
  std::uint64_t cached = 0;
  bool exhaustive = false;
  /// Every size below this was fully refuted.
  std::size_t refuted_below = 0;
};

/// Ascending sweep over n = k, k+1, ...; at the first n with a k-universal
/// shape all of them are collected. On budget or size-ceiling exhaustion
/// returns the best known upper bound with exhaustive = false.
SearchCertificate min_universal_size(std::size_t k, const SearchOptions& opts = {});

/// Refuses (std::runtime_error) unless the search completed exhaustively.
std::vector<TreeShape> all_min_universal(std::size_t k, const SearchOptions& opts = {});

/// G_1 = C_1, G_k = G_{floor(k/2)} + G_{k-1}: k-universal by construction.
TreeShape constructive_universal(std::size_t k);

/// Ordered factorization counts a(n) (OEIS A074206) and their partial sums.
struct KalmarSequence {
  std::vector<std::uint64_t> factorizations;  // a(1) ..
  std::vector<std::uint64_t> terms;           // partial sums

  std::uint64_t term(std::size_t k) const { return terms.at(k - 1); }
};

KalmarSequence kalmar_terms(std::size_t upto);

std::string format_certificate(const SearchCertificate& c);

/// Two rows, u(k) and the Kalmar partial sums, for k = 1..max_k. Entries
/// that are only upper bounds are written "<=N".
struct UniversalTable {
  std::vector<SearchCertificate> certificates;
  KalmarSequence kalmar;
};

UniversalTable compute_universal_table(std::size_t max_k, const SearchOptions& opts = {});
std::string format_universal_table(const UniversalTable& t);

}  // namespace treedeck
