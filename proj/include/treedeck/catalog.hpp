#pragma once

// Known minimum-size k-universal trees, composed from smaller ones.

#include <cstddef>
#include <string>
#include <vector>

#include "treedeck/shape.hpp"

namespace treedeck {

struct CatalogEntry {
  std::string name;  // e.g. "U_9^7"
  std::size_t k = 0;
  std::size_t size = 0;  // stated leaf count
  TreeShape tree;
};

/// Minimal k-universal trees for 4 <= k <= 11.
const std::vector<CatalogEntry>& minimal_universal_catalog();

/// Entries of the catalog for one k, in catalog order.
std::vector<CatalogEntry> catalog_for(std::size_t k);

/// A 12-universal tree with 28 leaves.
TreeShape universal_12_tree();

}  // namespace treedeck
