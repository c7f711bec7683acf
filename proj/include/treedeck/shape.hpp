#pragma once

// Canonical unlabeled rooted binary tree shapes.
//
// A TreeShape is an immutable value. Two shapes compare equal exactly when
// the underlying rooted binary trees are isomorphic; the canonical code is
// the identity. Subtrees are shared between shapes.

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace treedeck {

/// Raised by decode() and parse_text() on malformed input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Preorder bit string over {'0','1'}: leaf = "0", join = "1" A B with A <= B.
///
/// Codes are totally ordered by leaf count first, then lexicographically.
/// The leaf count of a well-formed code is the number of '0' symbols.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bits) : bits_(std::move(bits)) {}

  const std::string& bits() const noexcept { return bits_; }
  std::size_t leaf_count() const noexcept { return (bits_.size() + 1) / 2; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a,
                                          const CanonicalCode& b) {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  std::string bits_;
};

/// Ordering of raw code strings of well-formed codes (size, then bytes).
inline std::strong_ordering compare_codes(std::string_view a, std::string_view b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.compare(b) <=> 0;
}

class TreeShape {
 public:
  /// The single-leaf shape.
  TreeShape();

  static TreeShape leaf() { return TreeShape(); }
  /// Canonical shape of a ⊕ b; commutative.
  static TreeShape join(const TreeShape& a, const TreeShape& b);

  std::size_t size() const noexcept { return node_->size; }
  bool is_leaf() const noexcept { return node_->size == 1; }

  /// Children in canonical order (first <= second). Undefined on a leaf.
  TreeShape first() const;
  TreeShape second() const;

  const std::string& code() const noexcept { return node_->code; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const TreeShape& a, const TreeShape& b) noexcept {
    return a.node_ == b.node_ || (a.node_->hash == b.node_->hash && a.node_->code == b.node_->code);
  }
  friend std::strong_ordering operator<=>(const TreeShape& a, const TreeShape& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    return compare_codes(a.node_->code, b.node_->code);
  }

 private:
  struct Node {
    std::size_t size = 1;
    std::string code = "0";
    std::size_t hash = 0;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
  };

  explicit TreeShape(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TreeShapeHash {
  std::size_t operator()(const TreeShape& t) const noexcept { return t.hash(); }
};

/// Unordered pair {small, large} of subtree sizes at the root.
struct RootSplit {
  std::size_t small = 0;
  std::size_t large = 0;

  bool singleton() const noexcept { return small == large; }
  bool contains(std::size_t part) const noexcept { return part == small || part == large; }
  friend bool operator==(const RootSplit&, const RootSplit&) = default;
};

// Named families.

TreeShape caterpillar(std::size_t n);
TreeShape complete(std::size_t height);
TreeShape jellyfish(std::size_t k, std::size_t l);
TreeShape z_tree(std::size_t n);
TreeShape x_tree(std::size_t n);
TreeShape y_tree(std::size_t n);

CanonicalCode encode(const TreeShape& t);
TreeShape decode(const CanonicalCode& c);
TreeShape decode(std::string_view bits);

RootSplit root_split(const TreeShape& t);

/// Newick-like text: "*" for a leaf, "(A,B)" for a join, canonical child order.
std::string to_text(const TreeShape& t);
/// Accepts either child order and ASCII whitespace between tokens.
TreeShape parse_text(std::string_view text);

}  // namespace treedeck

template <>
struct std::hash<treedeck::TreeShape> {
  std::size_t operator()(const treedeck::TreeShape& t) const noexcept { return t.hash(); }
};
