#pragma once

// Reference implementations for tests. Nothing here uses canonical codes:
// trees are explicit node arrays with arbitrary child order, isomorphism is
// decided pairwise, and induced subtrees come from the union of leaf-to-leaf
// paths with degree-2 vertices suppressed.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "treedeck/shape.hpp"

namespace oracle {

struct RawTree {
  std::vector<std::array<int, 2>> kids;  // {-1,-1} at leaves
  int root = 0;

  bool leaf(int v) const { return kids[v][0] < 0; }

  int leaves_below(int v) const {
    return leaf(v) ? 1 : leaves_below(kids[v][0]) + leaves_below(kids[v][1]);
  }
  int size() const { return leaves_below(root); }

  std::vector<int> leaf_nodes() const {
    std::vector<int> out;
    collect(root, out);
    return out;
  }

 private:
  void collect(int v, std::vector<int>& out) const {
    if (leaf(v)) {
      out.push_back(v);
      return;
    }
    collect(kids[v][0], out);
    collect(kids[v][1], out);
  }
};

inline int add_node(RawTree& t, int a = -1, int b = -1) {
  t.kids.push_back({a, b});
  return static_cast<int>(t.kids.size()) - 1;
}

// Random split sizes and random child order.
inline int grow(RawTree& t, int n, std::mt19937_64& rng) {
  if (n == 1) return add_node(t);
  const int a = std::uniform_int_distribution<int>(1, n - 1)(rng);
  const int x = grow(t, a, rng);
  const int y = grow(t, n - a, rng);
  return add_node(t, x, y);
}

inline RawTree random_raw(int n, std::mt19937_64& rng) {
  RawTree t;
  t.root = grow(t, n, rng);
  return t;
}

inline int copy_shape(RawTree& t, const treedeck::TreeShape& s, std::mt19937_64& rng) {
  if (s.is_leaf()) return add_node(t);
  int x = copy_shape(t, s.first(), rng);
  int y = copy_shape(t, s.second(), rng);
  if (rng() & 1) std::swap(x, y);
  return add_node(t, x, y);
}

/// The shape drawn with random child order.
inline RawTree scramble(const treedeck::TreeShape& s, std::mt19937_64& rng) {
  RawTree t;
  t.root = copy_shape(t, s, rng);
  return t;
}

inline treedeck::TreeShape to_shape(const RawTree& t, int v) {
  if (t.leaf(v)) return treedeck::TreeShape();
  return treedeck::TreeShape::join(to_shape(t, t.kids[v][0]), to_shape(t, t.kids[v][1]));
}
inline treedeck::TreeShape to_shape(const RawTree& t) { return to_shape(t, t.root); }

inline bool isomorphic(const RawTree& s, int x, const RawTree& t, int y) {
  if (s.leaf(x) || t.leaf(y)) return s.leaf(x) && t.leaf(y);
  if (s.leaves_below(x) != t.leaves_below(y)) return false;
  const auto [x1, x2] = s.kids[x];
  const auto [y1, y2] = t.kids[y];
  return (isomorphic(s, x1, t, y1) && isomorphic(s, x2, t, y2)) ||
         (isomorphic(s, x1, t, y2) && isomorphic(s, x2, t, y1));
}
inline bool isomorphic(const RawTree& s, const RawTree& t) {
  return isomorphic(s, s.root, t, t.root);
}

/// T[S] for a set of leaf node ids.
inline RawTree induced(const RawTree& t, const std::vector<int>& chosen) {
  const int nodes = static_cast<int>(t.kids.size());
  std::vector<int> parent(nodes, -1), depth(nodes, 0);
  std::vector<int> order{t.root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    if (t.leaf(v)) continue;
    for (int c : t.kids[v]) {
      parent[c] = v;
      depth[c] = depth[v] + 1;
      order.push_back(c);
    }
  }
  // Mark every vertex on a path between two chosen leaves.
  std::vector<char> marked(nodes, 0);
  for (int v : chosen) marked[v] = 1;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      int u = chosen[i], w = chosen[j];
      while (u != w) {
        if (depth[u] < depth[w]) std::swap(u, w);
        marked[u] = 1;
        u = parent[u];
      }
      marked[u] = 1;
    }
  int top = -1;
  for (int v = 0; v < nodes; ++v)
    if (marked[v] && (top < 0 || depth[v] < depth[top])) top = v;

  RawTree out;
  // Copies the marked subgraph below v, contracting vertices with one marked child.
  auto build = [&](auto&& self, int v) -> int {
    if (t.leaf(v)) return add_node(out);
    std::vector<int> next;
    for (int c : t.kids[v])
      if (marked[c]) next.push_back(c);
    if (next.size() == 1) return self(self, next[0]);
    const int a = self(self, next[0]);
    const int b = self(self, next[1]);
    return add_node(out, a, b);
  };
  out.root = build(build, top);
  return out;
}

struct Class {
  RawTree representative;
  std::uint64_t count = 0;
};

/// Size-j multideck as isomorphism classes with multiplicities.
inline std::vector<Class> multideck(const RawTree& t, int j) {
  const auto leaves = t.leaf_nodes();
  const int n = static_cast<int>(leaves.size());
  std::vector<Class> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != j) continue;
    std::vector<int> chosen;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) chosen.push_back(leaves[i]);
    RawTree sub = induced(t, chosen);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const Class& c) { return isomorphic(c.representative, sub); });
    if (it == classes.end()) classes.push_back({std::move(sub), 1});
    else ++it->count;
  }
  return classes;
}

}  // namespace oracle
