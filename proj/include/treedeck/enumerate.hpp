#pragma once

// Exhaustive generation of all shapes of a given size.

#include <cstddef>
#include <memory>
#include <vector>

#include "treedeck/deck.hpp"
#include "treedeck/limits.hpp"
#include "treedeck/shape.hpp"

namespace treedeck {

/// All size-n shapes in strictly increasing canonical order. The level is
/// materialized on first access; smaller levels are cached process-wide and
/// shared read-only between threads.
class ShapeStream {
 public:
  explicit ShapeStream(std::size_t n) : n_(n) {}

  std::size_t size_class() const noexcept { return n_; }

  std::vector<TreeShape>::const_iterator begin() const { return level().begin(); }
  std::vector<TreeShape>::const_iterator end() const { return level().end(); }
  std::size_t count() const { return level().size(); }
  const std::vector<TreeShape>& shapes() const { return level(); }

 private:
  const std::vector<TreeShape>& level() const;

  std::size_t n_;
  mutable std::shared_ptr<const std::vector<TreeShape>> cached_;
};

/// Refuses n above limits.max_enumeration_size with an estimate of W_n.
ShapeStream all_shapes(std::size_t n, const Limits& limits = {});

/// Wedderburn-Etherington number W_n (OEIS A001190), by the convolution
/// recurrence rather than by enumeration.
Count wedderburn(std::size_t n);

}  // namespace treedeck
