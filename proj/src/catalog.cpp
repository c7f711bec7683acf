#include "treedeck/catalog.hpp"

namespace treedeck {

namespace {

TreeShape j(const TreeShape& a, const TreeShape& b) { return TreeShape::join(a, b); }

struct Blocks {
  TreeShape c1 = caterpillar(1), c2 = caterpillar(2), c3 = caterpillar(3), c4 = caterpillar(4);
  TreeShape b2 = complete(2);
  TreeShape u4_1 = j(c3, c2);
  TreeShape u4_2 = j(b2, c1);
  TreeShape u5 = j(u4_1, c1);
  TreeShape u6_1 = j(j(j(c3, c3), c2), c1);
  TreeShape u7 = j(j(u5, c3), c1);
  TreeShape u8_1 = j(j(j(j(u4_2, c1), u4_1), c2), c1);
};

const Blocks& blocks() {
  static const Blocks b;
  return b;
}

std::vector<CatalogEntry> build() {
  const Blocks& b = blocks();
  const TreeShape &c1 = b.c1, &c2 = b.c2, &c3 = b.c3, &c4 = b.c4, &b2 = b.b2;
  const TreeShape u42_c1 = j(b.u4_2, c1);
  const TreeShape c4_c2 = j(c4, c2);
  const TreeShape u7_u5 = j(b.u7, b.u5);

  std::vector<CatalogEntry> out;
  auto add = [&out](const char* name, std::size_t k, std::size_t size, TreeShape t) {
    out.push_back({name, k, size, std::move(t)});
  };

  add("U_4^1", 4, 5, b.u4_1);
  add("U_4^2", 4, 5, b.u4_2);

  add("U_5", 5, 6, b.u5);

  add("U_6^1", 6, 9, b.u6_1);
  add("U_6^2", 6, 9, j(j(j(c3, c3), c1), c2));
  add("U_6^3", 6, 9, j(j(b.u4_1, c3), c1));
  add("U_6^4", 6, 9, j(j(b.u4_2, c3), c1));
  add("U_6^5", 6, 9, j(j(c4, b2), c1));
  add("U_6^6", 6, 9, j(b.u5, c3));

  add("U_7", 7, 10, b.u7);

  add("U_8^1", 8, 14, b.u8_1);
  add("U_8^2", 8, 14, j(j(j(u42_c1, b.u4_1), c1), c2));
  add("U_8^3", 8, 14, j(j(j(b.u5, b.u4_1), c2), c1));
  add("U_8^4", 8, 14, j(j(j(b.u5, b.u4_1), c1), c2));
  add("U_8^5", 8, 14, j(j(j(b.u5, b.u4_2), c2), c1));
  add("U_8^6", 8, 14, j(j(j(b.u5, b.u4_2), c1), c2));
  add("U_8^7", 8, 14, j(j(j(c4_c2, b.u4_2), c2), c1));
  add("U_8^8", 8, 14, j(j(j(c4_c2, b.u4_2), c1), c2));

  add("U_9^1", 9, 16, j(j(j(j(u42_c1, b.u4_1), c1), c3), c1));
  add("U_9^2", 9, 16, j(j(j(j(b.u5, b.u4_1), c1), c3), c1));
  add("U_9^3", 9, 16, j(j(j(j(b.u5, b.u4_2), c1), c3), c1));
  add("U_9^4", 9, 16, j(j(j(j(c4_c2, b.u4_2), c1), c3), c1));
  add("U_9^5", 9, 16, j(j(j(j(b.u5, c4), c1), b2), c1));
  add("U_9^6", 9, 16, j(j(j(j(b.u5, b2), c1), c4), c1));
  add("U_9^7", 9, 16, j(j(b.u7, b.u4_1), c1));
  add("U_9^8", 9, 16, j(j(b.u7, b.u4_2), c1));

  add("U_10^1", 10, 19, j(j(u7_u5, c1), c2));
  add("U_10^2", 10, 19, j(j(u7_u5, c2), c1));

  add("U_11", 11, 21, j(j(j(u7_u5, c1), c3), c1));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& minimal_universal_catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::vector<CatalogEntry> catalog_for(std::size_t k) {
  std::vector<CatalogEntry> out;
  for (const auto& e : minimal_universal_catalog())
    if (e.k == k) out.push_back(e);
  return out;
}

TreeShape universal_12_tree() {
  const Blocks& b = blocks();
  return j(j(j(j(b.u8_1, b.u6_1), b.c1), b.c3), b.c1);
}

}  // namespace treedeck
