#include "treedeck/deck.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace treedeck {

Count binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Deck::Deck(std::size_t size_class, std::vector<TreeShape> members)
    : size_class_(size_class), members_(std::move(members)) {
  for (const auto& m : members_)
    if (m.size() != size_class_) throw std::invalid_argument("deck member has the wrong size");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Deck::contains(const TreeShape& t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

MultiDeck::MultiDeck(std::size_t size_class, Map counts) : size_class_(size_class) {
  for (auto& [shape, count] : counts) add(shape, count);
}

void MultiDeck::add(const TreeShape& t, const Count& multiplicity) {
  if (t.size() != size_class_) throw std::invalid_argument("multideck key has the wrong size");
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0) return;
  auto [it, inserted] = counts_.try_emplace(t, multiplicity);
  if (!inserted) it->second += multiplicity;
}

Count MultiDeck::multiplicity(const TreeShape& t) const {
  auto it = counts_.find(t);
  return it == counts_.end() ? Count(0) : it->second;
}

Count MultiDeck::total() const {
  Count sum = 0;
  for (const auto& [shape, count] : counts_) sum += count;
  return sum;
}

Deck MultiDeck::support() const {
  std::vector<TreeShape> members;
  members.reserve(counts_.size());
  for (const auto& [shape, count] : counts_) members.push_back(shape);
  return Deck(size_class_, std::move(members));
}

namespace {

std::optional<TreeShape> induced(const TreeShape& t, const std::vector<bool>& keep,
                                 std::size_t& next_leaf) {
  if (t.is_leaf()) {
    const bool kept = keep[next_leaf++];
    return kept ? std::optional<TreeShape>(TreeShape()) : std::nullopt;
  }
  auto a = induced(t.first(), keep, next_leaf);
  auto b = induced(t.second(), keep, next_leaf);
  if (a && b) return TreeShape::join(*a, *b);
  return a ? a : b;
}

// Flattened tree for the subset enumeration: every subtree covers a
// contiguous interval of leaf indices.
struct FlatNode {
  std::uint64_t leaf_mask = 0;
  int first = -1;
  int second = -1;
};

int flatten(const TreeShape& t, std::vector<FlatNode>& nodes, std::size_t& next_leaf) {
  const int id = static_cast<int>(nodes.size());
  nodes.emplace_back();
  if (t.is_leaf()) {
    nodes[id].leaf_mask = std::uint64_t{1} << next_leaf++;
    return id;
  }
  const int a = flatten(t.first(), nodes, next_leaf);
  const int b = flatten(t.second(), nodes, next_leaf);
  nodes[id].first = a;
  nodes[id].second = b;
  nodes[id].leaf_mask = nodes[a].leaf_mask | nodes[b].leaf_mask;
  return id;
}

// Canonical code of T[S] built directly as a string, without shape nodes.
std::string induced_code(const std::vector<FlatNode>& nodes, int id, std::uint64_t subset) {
  const FlatNode& node = nodes[id];
  const std::uint64_t here = subset & node.leaf_mask;
  if (std::popcount(here) == 1) return "0";
  const std::uint64_t in_first = here & nodes[node.first].leaf_mask;
  const std::uint64_t in_second = here & nodes[node.second].leaf_mask;
  if (in_first == 0) return induced_code(nodes, node.second, here);
  if (in_second == 0) return induced_code(nodes, node.first, here);
  std::string a = induced_code(nodes, node.first, here);
  std::string b = induced_code(nodes, node.second, here);
  if (compare_codes(b, a) < 0) std::swap(a, b);
  std::string out;
  out.reserve(1 + a.size() + b.size());
  out += '1';
  out += a;
  out += b;
  return out;
}

}  // namespace

TreeShape induced_subtree(const TreeShape& t, std::span<const std::size_t> leaves) {
  if (leaves.empty()) throw std::invalid_argument("induced subtree of an empty leaf set");
  std::vector<bool> keep(t.size(), false);
  for (std::size_t leaf : leaves) {
    if (leaf >= t.size()) throw std::out_of_range("leaf index " + std::to_string(leaf) + " out of range");
    keep[leaf] = true;
  }
  std::size_t next_leaf = 0;
  return *induced(t, keep, next_leaf);
}

MultiDeck multideck_bruteforce(const TreeShape& t, std::size_t j, const Limits& limits) {
  const std::size_t n = t.size();
  if (j == 0 || j > n) throw std::invalid_argument("deck size must lie in [1, n]");
  if (n > 63) throw InfeasibleError("subset enumeration supports at most 63 leaves", 0);
  const double work = binomial(n, j).convert_to<double>();
  if (work > limits.max_bruteforce_subsets) {
    std::ostringstream msg;
    msg << "subset enumeration needs C(" << n << "," << j << ") = " << work
        << " subsets, above the ceiling " << limits.max_bruteforce_subsets;
    throw InfeasibleError(msg.str(), work);
  }

  std::vector<FlatNode> nodes;
  std::size_t next_leaf = 0;
  flatten(t, nodes, next_leaf);

  std::unordered_map<std::string, std::uint64_t> tally;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Gosper's hack walks every n-bit mask with exactly j bits set.
  std::uint64_t subset = (std::uint64_t{1} << j) - 1;
  while (subset <= full) {
    ++tally[induced_code(nodes, 0, subset)];
    const std::uint64_t c = subset & (~subset + 1);
    const std::uint64_t r = subset + c;
    if (r == 0 || r > full) break;
    subset = (((r ^ subset) >> 2) / c) | r;
  }

  MultiDeck out(j);
  for (const auto& [code, count] : tally) out.add(decode(code), Count(count));
  return out;
}

void DeckCalculator::clear() {
  decks_.clear();
  multidecks_.clear();
}

const Deck& DeckCalculator::deck(const TreeShape& t, std::size_t j) {
  const std::size_t n = t.size();
  if (j == 0 || j > n) throw std::invalid_argument("deck size must lie in [1, n]");
  auto& slots = decks_.try_emplace(t.code(), n + 1).first->second;
  if (slots[j]) return *slots[j];

  if (j == n) return slots[j].emplace(j, std::vector<TreeShape>{t});

  const TreeShape a = t.first(), b = t.second();
  std::vector<TreeShape> members;
  if (j <= a.size()) {
    const Deck& da = deck(a, j);
    members.insert(members.end(), da.begin(), da.end());
  }
  if (j <= b.size()) {
    const Deck& db = deck(b, j);
    members.insert(members.end(), db.begin(), db.end());
  }
  const std::size_t lo = j > b.size() ? j - b.size() : 1;
  const std::size_t hi = std::min(a.size(), j - 1);
  for (std::size_t from_a = lo; from_a <= hi; ++from_a) {
    const Deck& da = deck(a, from_a);
    const Deck& db = deck(b, j - from_a);
    for (const auto& x : da)
      for (const auto& y : db) members.push_back(TreeShape::join(x, y));
  }
  // slots is still valid: unordered_map never relocates its values.
  return slots[j].emplace(j, std::move(members));
}

const MultiDeck& DeckCalculator::multideck(const TreeShape& t, std::size_t j) {
  const std::size_t n = t.size();
  if (j == 0 || j > n) throw std::invalid_argument("deck size must lie in [1, n]");
  auto& slots = multidecks_.try_emplace(t.code(), n + 1).first->second;
  if (slots[j]) return *slots[j];

  MultiDeck out(j);
  if (j == n) {
    out.add(t, 1);
    return slots[j].emplace(std::move(out));
  }

  const TreeShape a = t.first(), b = t.second();
  if (j <= a.size())
    for (const auto& [shape, count] : multideck(a, j).counts()) out.add(shape, count);
  if (j <= b.size())
    for (const auto& [shape, count] : multideck(b, j).counts()) out.add(shape, count);
  const std::size_t lo = j > b.size() ? j - b.size() : 1;
  const std::size_t hi = std::min(a.size(), j - 1);
  for (std::size_t from_a = lo; from_a <= hi; ++from_a) {
    const MultiDeck& da = multideck(a, from_a);
    const MultiDeck& db = multideck(b, j - from_a);
    for (const auto& [x, mx] : da.counts())
      for (const auto& [y, my] : db.counts()) out.add(TreeShape::join(x, y), mx * my);
  }
  return slots[j].emplace(std::move(out));
}

DeckProfile DeckCalculator::profile(const TreeShape& t) {
  DeckProfile p;
  p.per_size.reserve(t.size());
  for (std::size_t j = 1; j <= t.size(); ++j) {
    p.per_size.push_back(deck(t, j));
    p.subtree_count += p.per_size.back().size();
  }
  return p;
}

MultiDeck multideck(const TreeShape& t, std::size_t j) {
  DeckCalculator calc;
  return calc.multideck(t, j);
}

Deck deck(const TreeShape& t, std::size_t j) {
  DeckCalculator calc;
  return calc.deck(t, j);
}

DeckProfile deck_profile(const TreeShape& t) {
  DeckCalculator calc;
  return calc.profile(t);
}

std::size_t subtree_count(const TreeShape& t) { return deck_profile(t).subtree_count; }

MultiDeck project_multideck(const MultiDeck& d, std::size_t i, std::size_t n) {
  const std::size_t j = d.size_class();
  if (i == 0 || i >= j || j > n) throw std::invalid_argument("projection needs 1 <= i < j <= n");
  if (d.total() != binomial(n, j))
    throw InconsistentMultiDeck("total multiplicity differs from C(n, j)");

  DeckCalculator calc;
  std::map<TreeShape, Count> summed;
  for (const auto& [member, count] : d.counts())
    for (const auto& [sub, sub_count] : calc.multideck(member, i).counts())
      summed[sub] += count * sub_count;

  const Count factor = binomial(n - i, j - i);
  MultiDeck out(i);
  for (auto& [shape, count] : summed) {
    if (count % factor != 0)
      throw InconsistentMultiDeck("multiplicity of " + to_text(shape) +
                                  " is not divisible by C(n-i, j-i)");
    out.add(shape, count / factor);
  }
  return out;
}

std::string format_deck(const Deck& d) {
  std::string out;
  for (const auto& m : d) {
    out += to_text(m);
    out += '\n';
  }
  return out;
}

std::string format_multideck(const MultiDeck& d) {
  std::ostringstream out;
  for (const auto& [shape, count] : d.counts()) out << to_text(shape) << '\t' << count << '\n';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Deck& d) { return os << format_deck(d); }
std::ostream& operator<<(std::ostream& os, const MultiDeck& d) { return os << format_multideck(d); }

}  // namespace treedeck
