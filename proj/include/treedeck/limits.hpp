#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace treedeck {

/// Raised when a request exceeds a feasibility ceiling. The message carries
/// the work estimate that triggered the refusal.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  /// Estimated units of work (shapes, subsets, ...) the request would need.
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// Soft ceilings. Defaults cover the acceptance suite; deep runs raise them.
struct Limits {
  std::size_t max_enumeration_size = 22;       // largest n for all_shapes(n)
  double max_bruteforce_subsets = 1e7;          // C(n, j) cap for the subset oracle
  std::size_t max_exhaustive_size = 16;         // extremal / reconstruction sweeps
};

/// Worker-thread count handed down from the caller. 0 means one thread.
struct Parallelism {
  unsigned threads = 1;

  unsigned workers() const noexcept { return threads == 0 ? 1u : threads; }
};

}  // namespace treedeck
