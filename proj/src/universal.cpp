#include "treedeck/universal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "treedeck/catalog.hpp"
#include "treedeck/deck.hpp"
#include "treedeck/enumerate.hpp"
#include "treedeck/parallel.hpp"

namespace treedeck {

bool is_universal(const TreeShape& t, std::size_t k, bool* k_exceeds_size) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k_exceeds_size) *k_exceeds_size = k > t.size();
  if (k > t.size()) return false;
  DeckCalculator calc;
  return Count(calc.deck(t, k).size()) == wedderburn(k);
}

TreeShape constructive_universal(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  std::vector<TreeShape> g{TreeShape(), TreeShape()};  // g[0] unused
  for (std::size_t i = 2; i <= k; ++i) g.push_back(TreeShape::join(g[i / 2], g[i - 1]));
  return g[k];
}

KalmarSequence kalmar_terms(std::size_t upto) {
  if (upto == 0) throw std::invalid_argument("kalmar_terms needs upto >= 1");
  KalmarSequence s;
  s.factorizations.assign(upto, 0);
  s.factorizations[0] = 1;
  for (std::size_t n = 2; n <= upto; ++n)
    for (std::size_t d = 1; d < n; ++d)
      if (n % d == 0) s.factorizations[n - 1] += s.factorizations[d - 1];
  std::uint64_t sum = 0;
  for (auto a : s.factorizations) s.terms.push_back(sum += a);
  return s;
}

namespace {

using Word = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kChunk = 4096;
constexpr const char* kCacheHeader = "# treedeck universal-search cache v1";

struct BudgetExhausted {};

std::size_t count_range(const Word* row, std::size_t lo, std::size_t hi) {
  std::size_t total = 0;
  while (lo < hi) {
    const std::size_t w = lo / 64, bit = lo % 64;
    const std::size_t take = std::min<std::size_t>(64 - bit, hi - lo);
    Word mask = take == 64 ? ~Word{0} : ((Word{1} << take) - 1) << bit;
    total += std::popcount(row[w] & mask);
    lo += take;
  }
  return total;
}

// Appends (bit - lo) for every set bit in [lo, hi).
void collect_range(const Word* row, std::size_t lo, std::size_t hi, std::vector<std::uint32_t>& out) {
  out.clear();
  for (std::size_t w = lo / 64; w * 64 < hi; ++w) {
    Word bits = row[w];
    while (bits) {
      const std::size_t pos = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      if (pos >= lo && pos < hi) out.push_back(static_cast<std::uint32_t>(pos - lo));
    }
  }
}

// Shapes of one size as index pairs into smaller levels, listed split by
// split: left size a = 1..n/2, then left index, then right index (right >=
// left when both sides have equal size).
struct Pair {
  std::uint32_t left = 0, right = 0;
  std::uint32_t left_size = 0;
};

struct Level {
  std::vector<Pair> pairs;
  std::vector<std::size_t> split_base;  // split_base[a]: first index with left size a
};

struct CacheKey {
  std::size_t k, n, begin, end;
  auto operator<=>(const CacheKey&) const = default;
};

class SearchCache {
 public:
  explicit SearchCache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] != 'R') continue;
      std::istringstream fields(line);
      std::string tag;
      CacheKey key{};
      std::size_t count = 0;
      if (!(fields >> tag >> key.k >> key.n >> key.begin >> key.end >> count)) continue;
      std::vector<std::string> texts;
      std::string text;
      while (fields >> text) texts.push_back(text);
      if (texts.size() != count) continue;  // torn write
      records_[key] = std::move(texts);
    }
  }

  const std::vector<std::string>* find(const CacheKey& key) const {
    auto it = records_.find(key);
    return it == records_.end() ? nullptr : &it->second;
  }

  void append(const CacheKey& key, const std::vector<std::string>& texts) {
    if (path_.empty()) return;
    std::string line = "R\t" + std::to_string(key.k) + '\t' + std::to_string(key.n) + '\t' +
                       std::to_string(key.begin) + '\t' + std::to_string(key.end) + '\t' +
                       std::to_string(texts.size());
    for (const auto& t : texts) line += '\t' + t;
    line += '\n';
    std::lock_guard lock(mutex_);
    std::FILE* f = std::fopen(path_.c_str(), "a+");
    if (!f) throw std::runtime_error("cannot open cache file " + path_);
    std::fseek(f, 0, SEEK_END);
    const long end = std::ftell(f);
    if (end == 0) {
      std::fprintf(f, "%s\n", kCacheHeader);
    } else {
      // Finish a line torn by an interrupted writer.
      std::fseek(f, end - 1, SEEK_SET);
      if (std::fgetc(f) != '\n') std::fputc('\n', f);
    }
    std::fwrite(line.data(), 1, line.size(), f);
    std::fclose(f);
  }

 private:
  std::string path_;
  std::map<CacheKey, std::vector<std::string>> records_;
  std::mutex mutex_;
};

class Engine {
 public:
  Engine(std::size_t k, const SearchOptions& opts)
      : k_(k), opts_(opts), start_(Clock::now()), cache_(opts.cache_path) {
    levels_.resize(2);
    levels_[1].pairs.push_back({});
    for (std::size_t s = 2; s <= k_; ++s) build_level(s);
    offset_.assign(k_ + 2, 0);
    for (std::size_t s = 1; s <= k_; ++s) offset_[s + 1] = offset_[s] + levels_[s].pairs.size();
    words_ = (offset_[k_ + 1] + 63) / 64;
    profiles_.resize(1);
  }

  std::uint64_t explored() const { return explored_; }
  std::uint64_t cached() const { return cached_; }

  /// k-universal shapes of size n, canonical order.
  std::vector<TreeShape> sweep(std::size_t n) {
    while (levels_.size() <= n) build_level(levels_.size());
    while (profiles_.size() < n) build_profiles(profiles_.size());

    const std::size_t count = levels_[n].pairs.size();
    const std::size_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<std::vector<std::string>> found(chunks);
    std::vector<std::uint64_t> evaluated(chunks, 0);
    std::vector<Scratch> scratch(opts_.parallelism.workers());
    parallel_chunks(chunks, 1, opts_.parallelism, [&](std::size_t cb, std::size_t ce, unsigned w) {
      for (std::size_t c = cb; c < ce; ++c) {
        const CacheKey key{k_, n, c * kChunk, std::min(count, (c + 1) * kChunk)};
        if (const auto* hit = cache_.find(key)) {
          found[c] = *hit;
          cached_ += key.end - key.begin;
          continue;
        }
        check_budget();
        for (std::size_t i = key.begin; i < key.end; ++i) {
          ++evaluated[c];
          if (universal_at(n, i, scratch[w])) found[c].push_back(to_text(shape_at(n, i)));
        }
        cache_.append(key, found[c]);
      }
    });
    std::vector<TreeShape> out;
    for (std::size_t c = 0; c < chunks; ++c) {
      explored_ += evaluated[c];
      for (const auto& text : found[c]) out.push_back(parse_text(text));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Scratch {
    std::vector<Word> row;
    std::vector<std::vector<std::uint32_t>> left, right;
  };

  void check_budget() const {
    if (opts_.budget_seconds <= 0) return;
    const std::chrono::duration<double> spent = Clock::now() - start_;
    if (spent.count() > opts_.budget_seconds) throw BudgetExhausted{};
  }

  void build_level(std::size_t n) {
    if (levels_.size() <= n) levels_.resize(n + 1);
    Level& level = levels_[n];
    level.split_base.assign(n / 2 + 2, 0);
    for (std::size_t a = 1; a <= n / 2; ++a) {
      level.split_base[a] = level.pairs.size();
      const std::size_t b = n - a;
      const std::size_t na = levels_[a].pairs.size(), nb = levels_[b].pairs.size();
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = (a == b ? i : 0); j < nb; ++j)
          level.pairs.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                 static_cast<std::uint32_t>(a)});
    }
    level.split_base[n / 2 + 1] = level.pairs.size();
  }

  TreeShape shape_at(std::size_t n, std::size_t idx) const {
    if (n == 1) return TreeShape();
    const Pair& p = levels_[n].pairs[idx];
    return TreeShape::join(shape_at(p.left_size, p.left), shape_at(n - p.left_size, p.right));
  }

  // Level index of the join of shape i (size a) with shape j (size b).
  std::size_t join_index(std::size_t a, std::size_t i, std::size_t b, std::size_t j) const {
    if (a > b || (a == b && i > j)) {
      std::swap(a, b);
      std::swap(i, j);
    }
    const Level& level = levels_[a + b];
    std::size_t pos;
    if (a < b) {
      pos = i * levels_[b].pairs.size() + j;
    } else {
      const std::size_t m = levels_[a].pairs.size();
      pos = i * m - i * (i - 1) / 2 + (j - i);
    }
    return level.split_base[a] + pos;
  }

  const Word* profile(std::size_t n, std::size_t idx) const {
    return profiles_[n].data() + idx * words_;
  }

  void prepare(Scratch& s) const {
    s.row.assign(words_, 0);
    s.left.resize(k_ + 1);
    s.right.resize(k_ + 1);
  }

  // Fills s.left[size] / s.right[size] with level indices of the deck
  // members of each child, for sizes below k.
  void collect_children(std::size_t a, const Word* pa, std::size_t b, const Word* pb,
                        Scratch& s) const {
    for (std::size_t x = 1; x < k_; ++x) {
      if (x <= a) collect_range(pa, offset_[x], offset_[x + 1], s.left[x]);
      else s.left[x].clear();
      if (x <= b) collect_range(pb, offset_[x], offset_[x + 1], s.right[x]);
      else s.right[x].clear();
    }
  }

  // Adds the cross joins of size j into row; stops once the size-j range is full.
  void add_joins(std::size_t j, Scratch& s, Word* row, std::size_t have) const {
    const std::size_t want = levels_[j].pairs.size();
    for (std::size_t x = 1; x < j && have < want; ++x) {
      const auto& ls = s.left[x];
      const auto& rs = s.right[j - x];
      for (std::uint32_t li : ls) {
        for (std::uint32_t ri : rs) {
          const std::size_t bit = offset_[j] + join_index(x, li, j - x, ri);
          const Word mask = Word{1} << (bit % 64);
          if (!(row[bit / 64] & mask)) {
            row[bit / 64] |= mask;
            if (++have == want) return;
          }
        }
      }
    }
  }

  void build_profiles(std::size_t n) {
    const std::size_t count = levels_[n].pairs.size();
    profiles_.resize(n + 1);
    profiles_[n].assign(count * words_, 0);
    if (n == 1) {
      profiles_[1][0] = 1;  // the leaf is shape 0 of size 1
      return;
    }
    std::vector<Scratch> scratch(opts_.parallelism.workers());
    for (auto& s : scratch) prepare(s);
    parallel_chunks(count, 1024, opts_.parallelism, [&](std::size_t b, std::size_t e, unsigned w) {
      check_budget();
      Scratch& s = scratch[w];
      for (std::size_t idx = b; idx < e; ++idx) {
        const Pair& p = levels_[n].pairs[idx];
        const std::size_t a = p.left_size, bs = n - a;
        const Word* pa = profile(a, p.left);
        const Word* pb = profile(bs, p.right);
        Word* row = profiles_[n].data() + idx * words_;
        for (std::size_t i = 0; i < words_; ++i) row[i] = pa[i] | pb[i];
        if (n <= k_) {
          const std::size_t bit = offset_[n] + idx;
          row[bit / 64] |= Word{1} << (bit % 64);
        }
        collect_children(a, pa, bs, pb, s);
        for (std::size_t j = 2; j <= std::min(k_, n - 1); ++j)
          add_joins(j, s, row, count_range(row, offset_[j], offset_[j + 1]));
      }
    });
  }

  bool universal_at(std::size_t n, std::size_t idx, Scratch& s) const {
    if (n == 1) return k_ == 1;
    if (s.row.size() != words_) prepare(s);
    const Pair& p = levels_[n].pairs[idx];
    const std::size_t a = p.left_size, b = n - a;
    const Word* pa = profile(a, p.left);
    const Word* pb = profile(b, p.right);
    const std::size_t want = levels_[k_].pairs.size();
    if (n == k_) return want == 1;

    const std::size_t lo = offset_[k_] / 64, hi = (offset_[k_ + 1] + 63) / 64;
    for (std::size_t i = lo; i < hi; ++i) s.row[i] = pa[i] | pb[i];
    const std::size_t have = count_range(s.row.data(), offset_[k_], offset_[k_ + 1]);
    if (have == want) return true;

    // Cheap necessary condition before any join is formed.
    std::size_t bound = have;
    for (std::size_t x = 1; x < k_; ++x) {
      if (x > a || k_ - x > b) continue;
      bound += count_range(pa, offset_[x], offset_[x + 1]) *
               count_range(pb, offset_[k_ - x], offset_[k_ - x + 1]);
      if (bound >= want) break;
    }
    if (bound < want) return false;

    collect_children(a, pa, b, pb, s);
    add_joins(k_, s, s.row.data(), have);
    return count_range(s.row.data(), offset_[k_], offset_[k_ + 1]) == want;
  }

  std::size_t k_;
  SearchOptions opts_;
  Clock::time_point start_;
  SearchCache cache_;
  std::vector<Level> levels_;
  std::vector<std::size_t> offset_;  // first id of each size <= k
  std::size_t words_ = 0;
  std::vector<std::vector<Word>> profiles_;  // profiles_[n]: one row per shape of size n
  std::atomic<std::uint64_t> explored_{0}, cached_{0};
};

SearchCertificate upper_bound_certificate(std::size_t k, std::size_t refuted_below) {
  std::vector<TreeShape> candidates;
  for (const auto& e : catalog_for(k)) candidates.push_back(e.tree);
  if (k == 12) candidates.push_back(universal_12_tree());
  candidates.push_back(constructive_universal(k));
  std::optional<TreeShape> best;
  for (const auto& t : candidates)
    if ((!best || t.size() < best->size()) && is_universal(t, k)) best = t;
  if (!best) throw std::logic_error("no verified upper bound for k = " + std::to_string(k));

  SearchCertificate c;
  c.k = k;
  c.u_value = best->size();
  c.witnesses = {*best};
  c.exhaustive = false;
  c.refuted_below = refuted_below;
  return c;
}

}  // namespace

SearchCertificate min_universal_size(std::size_t k, const SearchOptions& opts) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (opts.budget_seconds <= 0 && k > opts.exhaustive_k_limit)
    return upper_bound_certificate(k, k);

  Engine engine(k, opts);
  std::size_t refuted_below = k;
  try {
    for (std::size_t n = k;; ++n) {
      if (opts.max_size != 0 && n > opts.max_size) break;
      auto witnesses = engine.sweep(n);
      if (!witnesses.empty()) {
        SearchCertificate c;
        c.k = k;
        c.u_value = n;
        c.witnesses = std::move(witnesses);
        c.explored = engine.explored();
        c.cached = engine.cached();
        c.exhaustive = true;
        c.refuted_below = n;
        return c;
      }
      refuted_below = n + 1;
    }
  } catch (const BudgetExhausted&) {
  }
  SearchCertificate c = upper_bound_certificate(k, refuted_below);
  c.explored = engine.explored();
  c.cached = engine.cached();
  return c;
}

std::vector<TreeShape> all_min_universal(std::size_t k, const SearchOptions& opts) {
  SearchCertificate c = min_universal_size(k, opts);
  if (!c.exhaustive)
    throw std::runtime_error("search for k = " + std::to_string(k) +
                             " did not complete; only an upper bound is known");
  return c.witnesses;
}

std::string format_certificate(const SearchCertificate& c) {
  std::ostringstream out;
  out << "u(" << c.k << ")" << (c.exhaustive ? "=" : "<=") << c.u_value << '\n'
      << "k\t" << c.k << '\n'
      << "u\t" << c.u_value << '\n'
      << "exhaustive\t" << (c.exhaustive ? "yes" : "no") << '\n'
      << "refuted_below\t" << c.refuted_below << '\n'
      << "explored\t" << c.explored << '\n'
      << "cached\t" << c.cached << '\n'
      << "witness_count\t" << c.witnesses.size() << '\n';
  for (const auto& w : c.witnesses) out << "witness\t" << to_text(w) << '\n';
  return out.str();
}

UniversalTable compute_universal_table(std::size_t max_k, const SearchOptions& opts) {
  UniversalTable t;
  for (std::size_t k = 1; k <= max_k; ++k) t.certificates.push_back(min_universal_size(k, opts));
  t.kalmar = kalmar_terms(std::max<std::size_t>(max_k, 1));
  return t;
}

std::string format_universal_table(const UniversalTable& t) {
  std::ostringstream out;
  out << "k";
  for (const auto& c : t.certificates) out << '\t' << c.k;
  out << "\nu(k)";
  for (const auto& c : t.certificates) out << '\t' << (c.exhaustive ? "" : "<=") << c.u_value;
  out << "\nkalmar";
  for (std::size_t i = 0; i < t.certificates.size(); ++i) out << '\t' << t.kalmar.terms[i];
  out << '\n';
  return out.str();
}

}  // namespace treedeck
