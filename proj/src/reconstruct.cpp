#include "treedeck/reconstruct.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "treedeck/enumerate.hpp"
#include "treedeck/parallel.hpp"

namespace treedeck {

const char* to_string(DeckMode mode) noexcept {
  return mode == DeckMode::deck ? "deck" : "multideck";
}

namespace {

std::string fingerprint(DeckCalculator& calc, const TreeShape& t, std::size_t j, DeckMode mode) {
  std::string out;
  if (mode == DeckMode::deck) {
    for (const auto& m : calc.deck(t, j)) {
      out += m.code();
      out += ';';
    }
  } else {
    for (const auto& [m, count] : calc.multideck(t, j).counts()) {
      out += m.code();
      out += ':';
      out += count.str();
      out += ';';
    }
  }
  return out;
}

void check_feasible(std::size_t n, const Limits& limits) {
  if (n > limits.max_exhaustive_size) {
    const double estimate = wedderburn(n).convert_to<double>();
    std::ostringstream msg;
    msg << "exhaustive sweep over size " << n << " touches " << estimate
        << " shapes; ceiling is size " << limits.max_exhaustive_size;
    throw InfeasibleError(msg.str(), estimate);
  }
}

TreeShape cat(std::size_t n) { return caterpillar(n); }

TreeShape quad(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return TreeShape::join(TreeShape::join(cat(a), cat(b)), TreeShape::join(cat(c), cat(d)));
}

}  // namespace

DeterminationReport decks_determine(std::size_t n, std::size_t j, DeckMode mode,
                                    const Limits& limits, Parallelism par) {
  if (j == 0 || j > n) throw std::invalid_argument("deck size must lie in [1, n]");
  check_feasible(n, limits);
  const auto& shapes = all_shapes(n, limits).shapes();

  std::vector<std::string> prints(shapes.size());
  std::vector<DeckCalculator> calcs(par.workers());
  parallel_chunks(shapes.size(), 16, par, [&](std::size_t b, std::size_t e, unsigned w) {
    for (std::size_t i = b; i < e; ++i) prints[i] = fingerprint(calcs[w], shapes[i], j, mode);
  });

  // Shapes are in canonical order, so the first two members of a group are
  // that group's least pair.
  std::unordered_map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < shapes.size(); ++i) groups[prints[i]].push_back(i);

  DeterminationReport r;
  r.n = n;
  r.j = j;
  r.mode = mode;
  r.shapes = shapes.size();
  r.groups = groups.size();
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& [print, members] : groups) {
    if (members.size() < 2) continue;
    std::pair<std::size_t, std::size_t> cand{members[0], members[1]};
    if (!best || cand < *best) best = cand;
  }
  r.determined = !best.has_value();
  if (best) r.witness = std::make_pair(shapes[best->first], shapes[best->second]);
  return r;
}

ReconstructionNumber reconstruction_number(std::size_t n, DeckMode mode, const Limits& limits,
                                           Parallelism par) {
  if (n < 4) throw std::invalid_argument("reconstruction numbers are defined for n >= 4");
  check_feasible(n, limits);
  std::size_t value = n;
  for (std::size_t j = n - 1; j >= 1; --j) {
    if (!decks_determine(n, j, mode, limits, par).determined) break;
    value = j;
  }
  return ReconstructionNumber{n, value, mode};
}

CounterexampleFamily counterexample_family(std::size_t n) {
  CounterexampleFamily f;
  f.n = n;
  f.residue = n % 4;
  f.k = (n + 3) / 4;
  f.deck_size = 2 * f.k;
  const std::size_t k = f.k;
  switch (f.residue) {
    case 0:
      if (k < 2) throw UnsupportedSize("size 4k needs k >= 2");
      f.t1 = quad(k + 1, k - 1, k, k);
      f.t2 = quad(k + 1, k, k, k - 1);
      f.s = quad(k + 1, k - 1, k, k - 1);
      break;
    case 3:
      if (k < 3) throw UnsupportedSize("size 4k-1 needs k >= 3, so sizes 3 and 7 have no family");
      f.t1 = quad(k + 1, k, k, k - 2);
      f.t2 = quad(k + 1, k - 1, k, k - 1);
      f.s = quad(k + 1, k - 1, k, k - 2);
      break;
    case 2:
      if (k < 2) throw UnsupportedSize("size 4k-2 needs k >= 2");
      f.t1 = quad(k, k - 1, k, k - 1);
      f.t2 = quad(k, k, k - 1, k - 1);
      f.s = quad(k, k - 1, k - 1, k - 1);
      break;
    default:
      if (k < 2) throw UnsupportedSize("size 4k-3 needs k >= 2");
      if (k == 2) {
        f.t1 = TreeShape::join(complete(2), TreeShape());
        f.t2 = TreeShape::join(cat(3), cat(2));
      } else {
        f.t1 = quad(k, k, k - 1, k - 2);
        f.t2 = quad(k, k - 1, k, k - 2);
        f.s = quad(k, k - 1, k - 1, k - 2);
      }
      break;
  }
  return f;
}

CounterexampleCheck verify_counterexample(const CounterexampleFamily& f) {
  CounterexampleCheck c;
  DeckCalculator calc;
  const std::size_t j = f.deck_size;
  c.trees_differ = f.t1 != f.t2;
  if (f.t1.size() != f.n || f.t2.size() != f.n || j > f.n) return c;

  const Deck& d1 = calc.deck(f.t1, j);
  const Deck& d2 = calc.deck(f.t2, j);
  std::vector<const Deck*> decks{&d1, &d2};
  c.s_is_subtree = true;
  if (f.s) {
    if (f.s->size() < j || f.s->size() > f.n) {
      c.s_is_subtree = false;
    } else {
      decks.push_back(&calc.deck(*f.s, j));
      c.s_is_subtree = calc.deck(f.t1, f.s->size()).contains(*f.s) &&
                       calc.deck(f.t2, f.s->size()).contains(*f.s);
    }
  }

  c.decks_equal = true;
  for (std::size_t a = 0; a < decks.size(); ++a) {
    for (std::size_t b = a + 1; b < decks.size(); ++b) {
      if (*decks[a] == *decks[b]) continue;
      c.decks_equal = false;
      std::vector<TreeShape> diff;
      std::set_symmetric_difference(decks[a]->begin(), decks[a]->end(), decks[b]->begin(),
                                    decks[b]->end(), std::back_inserter(diff));
      if (!diff.empty() && (!c.first_difference || diff.front() < *c.first_difference))
        c.first_difference = diff.front();
    }
  }
  c.multidecks_differ = calc.multideck(f.t1, j) != calc.multideck(f.t2, j);
  c.valid = c.trees_differ && c.decks_equal && c.s_is_subtree && c.multidecks_differ;
  return c;
}

std::string format_report(const DeterminationReport& r) {
  std::ostringstream out;
  out << "n\t" << r.n << '\n'
      << "j\t" << r.j << '\n'
      << "mode\t" << to_string(r.mode) << '\n'
      << "shapes\t" << r.shapes << '\n'
      << "groups\t" << r.groups << '\n'
      << "determined\t" << (r.determined ? "yes" : "no") << '\n';
  if (r.witness) {
    out << "witness\t" << to_text(r.witness->first) << '\n'
        << "witness\t" << to_text(r.witness->second) << '\n';
  }
  return out.str();
}

}  // namespace treedeck
