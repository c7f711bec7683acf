#include "treedeck/shape.hpp"

#include <cctype>
#include <vector>

namespace treedeck {

TreeShape::TreeShape() {
  static const std::shared_ptr<const Node> leaf_node = [] {
    auto n = std::make_shared<Node>();
    n->hash = std::hash<std::string>{}(n->code);
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = leaf_node;
}

TreeShape TreeShape::join(const TreeShape& a, const TreeShape& b) {
  const bool swap = (b <=> a) < 0;
  const TreeShape& lo = swap ? b : a;
  const TreeShape& hi = swap ? a : b;
  auto n = std::make_shared<Node>();
  n->size = lo.size() + hi.size();
  n->code.reserve(1 + lo.code().size() + hi.code().size());
  n->code = "1";
  n->code += lo.code();
  n->code += hi.code();
  n->hash = std::hash<std::string>{}(n->code);
  n->first = lo.node_;
  n->second = hi.node_;
  return TreeShape(std::move(n));
}

TreeShape TreeShape::first() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return TreeShape(node_->first);
}

TreeShape TreeShape::second() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return TreeShape(node_->second);
}

TreeShape caterpillar(std::size_t n) {
  if (n == 0) throw std::invalid_argument("caterpillar needs at least one leaf");
  TreeShape t;
  for (std::size_t i = 1; i < n; ++i) t = TreeShape::join(TreeShape(), t);
  return t;
}

TreeShape complete(std::size_t height) {
  TreeShape t;
  for (std::size_t h = 0; h < height; ++h) t = TreeShape::join(t, t);
  return t;
}

TreeShape jellyfish(std::size_t k, std::size_t l) {
  if (l < 2) throw std::invalid_argument("jellyfish needs caterpillar length l >= 2");
  TreeShape t = caterpillar(l);
  for (std::size_t h = 0; h < k; ++h) t = TreeShape::join(t, t);
  return t;
}

TreeShape z_tree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("z_tree needs n >= 1");
  // Z_n for n <= 3 is the caterpillar; afterwards peel C_1 or C_2 off the top.
  std::vector<std::size_t> peel;
  while (n > 3) {
    std::size_t step = (n % 3 == 0) ? 1 : 2;
    peel.push_back(step);
    n -= step;
  }
  TreeShape t = caterpillar(n);
  for (auto it = peel.rbegin(); it != peel.rend(); ++it) t = TreeShape::join(caterpillar(*it), t);
  return t;
}

TreeShape x_tree(std::size_t n) {
  if (n == 0 || n % 4 != 1) throw std::invalid_argument("x_tree needs n = 1 (mod 4)");
  const TreeShape c1, c3 = caterpillar(3);
  TreeShape t;
  for (std::size_t m = 5; m <= n; m += 4) t = TreeShape::join(c3, TreeShape::join(c1, t));
  return t;
}

TreeShape y_tree(std::size_t n) {
  if (n < 2 || n % 4 != 2) throw std::invalid_argument("y_tree needs n = 2 (mod 4)");
  return TreeShape::join(TreeShape(), x_tree(n - 1));
}

CanonicalCode encode(const TreeShape& t) { return CanonicalCode(t.code()); }

namespace {

class CodeDecoder {
 public:
  explicit CodeDecoder(std::string_view bits) : bits_(bits) {}

  TreeShape run() {
    if (bits_.empty()) throw ParseError(0, "empty code");
    TreeShape t = parse();
    if (pos_ != bits_.size()) throw ParseError(pos_, "trailing symbols after complete code");
    return t;
  }

 private:
  TreeShape parse() {
    if (pos_ >= bits_.size()) throw ParseError(pos_, "code ends inside a subtree");
    const std::size_t start = pos_;
    const char c = bits_[pos_++];
    if (c == '0') return TreeShape();
    if (c != '1') throw ParseError(start, std::string("invalid symbol '") + c + "'");
    TreeShape a = parse();
    const std::size_t second_start = pos_;
    TreeShape b = parse();
    if ((b <=> a) < 0) throw ParseError(second_start, "children out of canonical order");
    return TreeShape::join(a, b);
  }

  std::string_view bits_;
  std::size_t pos_ = 0;
};

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  TreeShape run() {
    TreeShape t = shape();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "expected end of input");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  TreeShape shape() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      return TreeShape();
    }
    if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError(pos_, "expected '*' or '('");
    ++pos_;
    TreeShape a = shape();
    expect(',');
    TreeShape b = shape();
    expect(')');
    return TreeShape::join(a, b);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_text(const TreeShape& t, std::string& out) {
  if (t.is_leaf()) {
    out += '*';
    return;
  }
  out += '(';
  append_text(t.first(), out);
  out += ',';
  append_text(t.second(), out);
  out += ')';
}

}  // namespace

TreeShape decode(std::string_view bits) { return CodeDecoder(bits).run(); }
TreeShape decode(const CanonicalCode& c) { return decode(std::string_view(c.bits())); }

RootSplit root_split(const TreeShape& t) {
  if (t.is_leaf()) throw std::invalid_argument("a leaf has no root split");
  // first() is never larger than second() in canonical order.
  return RootSplit{t.first().size(), t.second().size()};
}

std::string to_text(const TreeShape& t) {
  std::string out;
  out.reserve(4 * t.size());
  append_text(t, out);
  return out;
}

TreeShape parse_text(std::string_view text) { return TextParser(text).run(); }

}  // namespace treedeck
