#include "treedeck/extremal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "treedeck/enumerate.hpp"
#include "treedeck/parallel.hpp"

namespace treedeck {

const char* to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::max_deck: return "max-deck";
    case Quantity::min_subtrees: return "min-subtrees";
    case Quantity::singleton_deck: return "singleton";
  }
  return "?";
}

std::size_t g(std::size_t n) {
  if (n == 0) throw std::invalid_argument("g(n) needs n >= 1");
  if (n <= 2) return n - 1;
  const std::size_t third = n / 3;
  return n % 3 == 2 ? 2 * third : 2 * third - 1;
}

Count s_y_closed_form(std::size_t m) {
  if (m < 6 || m % 4 != 2) throw std::invalid_argument("closed form needs m = 2 (mod 4), m >= 6");
  Count p = 1;
  for (std::size_t i = 0; i < (m - 6) / 4; ++i) p *= 5;
  return 1 + 8 * p;
}

namespace {

const std::vector<TreeShape>& sweep_shapes(std::size_t n, const Limits& limits) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > limits.max_exhaustive_size) {
    const double estimate = wedderburn(n).convert_to<double>();
    std::ostringstream msg;
    msg << "exhaustive sweep over size " << n << " touches " << estimate
        << " shapes; ceiling is size " << limits.max_exhaustive_size;
    throw InfeasibleError(msg.str(), estimate);
  }
  return all_shapes(n, limits).shapes();
}

template <typename Measure>
std::vector<std::size_t> measure_all(const std::vector<TreeShape>& shapes, Parallelism par,
                                     Measure&& measure) {
  std::vector<std::size_t> values(shapes.size());
  std::vector<DeckCalculator> calcs(par.workers());
  parallel_chunks(shapes.size(), 8, par, [&](std::size_t b, std::size_t e, unsigned w) {
    for (std::size_t i = b; i < e; ++i) values[i] = measure(calcs[w], shapes[i]);
  });
  return values;
}

}  // namespace

ExtremalReport max_deck_bruteforce(std::size_t n, const Limits& limits, Parallelism par) {
  const auto& shapes = sweep_shapes(n, limits);
  ExtremalReport r;
  r.n = n;
  r.quantity = Quantity::max_deck;
  if (n == 1) {
    r.achievers = shapes;
    r.verified = g(1) == 0;
    return r;
  }
  const auto sizes = measure_all(shapes, par, [n](DeckCalculator& c, const TreeShape& t) {
    return c.deck(t, n - 1).size();
  });
  r.value = *std::max_element(sizes.begin(), sizes.end());
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (sizes[i] == r.value) r.achievers.push_back(shapes[i]);

  if (r.value != g(n))
    r.failures.push_back("maximum " + std::to_string(r.value) + " differs from g(n) = " +
                         std::to_string(g(n)));
  if (!std::binary_search(r.achievers.begin(), r.achievers.end(), z_tree(n)))
    r.failures.push_back("Z_n does not attain the maximum");
  if (n % 3 == 0) {
    for (const auto& a : r.achievers)
      if (!root_split(a).contains(1))
        r.failures.push_back("achiever " + to_text(a) + " has no leaf child at the root");
  }
  r.verified = r.failures.empty();
  return r;
}

ExtremalReport min_subtrees_bruteforce(std::size_t n, const Limits& limits, Parallelism par) {
  const auto& shapes = sweep_shapes(n, limits);
  ExtremalReport r;
  r.n = n;
  r.quantity = Quantity::min_subtrees;
  const auto counts = measure_all(shapes, par, [](DeckCalculator& c, const TreeShape& t) {
    return c.profile(t).subtree_count;
  });
  r.value = *std::min_element(counts.begin(), counts.end());
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (counts[i] == r.value) r.achievers.push_back(shapes[i]);

  std::vector<TreeShape> expected{caterpillar(n)};
  if (n == 4) expected.push_back(complete(2));
  std::sort(expected.begin(), expected.end());
  if (r.value != n) r.failures.push_back("minimum " + std::to_string(r.value) + " differs from n");
  if (r.achievers != expected) r.failures.push_back("achievers differ from {C_n} (and B_2 at n = 4)");
  r.verified = r.failures.empty();
  return r;
}

std::vector<TreeShape> jellyfish_of_size(std::size_t n) {
  std::vector<TreeShape> out;
  for (std::size_t k = 0, blocks = 1; blocks <= n; ++k, blocks *= 2)
    if (n % blocks == 0 && n / blocks >= 2) out.push_back(jellyfish(k, n / blocks));
  std::sort(out.begin(), out.end());
  return out;
}

ExtremalReport singleton_deck_shapes(std::size_t n, const Limits& limits, Parallelism par) {
  if (n < 2) throw std::invalid_argument("singleton decks need n >= 2");
  const auto& shapes = sweep_shapes(n, limits);
  ExtremalReport r;
  r.n = n;
  r.quantity = Quantity::singleton_deck;
  r.value = 1;
  const auto sizes = measure_all(shapes, par, [n](DeckCalculator& c, const TreeShape& t) {
    return c.deck(t, n - 1).size();
  });
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (sizes[i] == 1) r.achievers.push_back(shapes[i]);
  if (r.achievers != jellyfish_of_size(n))
    r.failures.push_back("singleton-deck shapes differ from the jellyfish of size n");
  r.verified = r.failures.empty();
  return r;
}

bool singleton_jdeck_check(std::size_t n, const Limits& limits, Parallelism par) {
  if (n < 5) throw std::invalid_argument("check needs n >= 5");
  const auto& shapes = sweep_shapes(n, limits);
  const TreeShape cat = caterpillar(n);
  const auto violations = measure_all(shapes, par, [&](DeckCalculator& c, const TreeShape& t) {
    std::size_t bad = 0;
    if (t == cat) return bad;
    for (std::size_t j = 4; j + 2 <= n; ++j)
      if (c.deck(t, j).size() == 1) ++bad;
    return bad;
  });
  return std::all_of(violations.begin(), violations.end(), [](std::size_t v) { return v == 0; });
}

bool verify_xy_recurrences(std::size_t n) {
  if (n < 5 || n % 4 != 1) throw std::invalid_argument("recurrences need n = 1 (mod 4), n >= 5");
  DeckCalculator calc;
  auto s = [&calc](const TreeShape& t) { return Count(calc.profile(t).subtree_count); };
  const Count y1 = s(y_tree(n + 1));
  const Count x4 = s(x_tree(n + 4));
  const Count y5 = s(y_tree(n + 5));
  const Count x8 = s(x_tree(n + 8));
  return y5 == 2 * x4 - y1 && x8 == 4 * y5 - x4 - 2 * y1;
}

Count s_y_from_recurrence(std::size_t m, const Count& s_y6, const Count& s_y10) {
  if (m < 6 || m % 4 != 2) throw std::invalid_argument("needs m = 2 (mod 4), m >= 6");
  // Eliminating X gives S(Y_{m+8}) = 6 S(Y_{m+4}) - 5 S(Y_m).
  if (m == 6) return s_y6;
  Count prev = s_y6, cur = s_y10;
  for (std::size_t at = 10; at < m; at += 4) {
    Count next = 6 * cur - 5 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string format_report(const ExtremalReport& r) {
  std::ostringstream out;
  out << "n\t" << r.n << '\n'
      << "quantity\t" << to_string(r.quantity) << '\n'
      << "value\t" << r.value << '\n'
      << "verified\t" << (r.verified ? "yes" : "no") << '\n';
  for (const auto& a : r.achievers) out << "achiever\t" << to_text(a) << '\n';
  for (const auto& f : r.failures) out << "failure\t" << f << '\n';
  return out.str();
}

}  // namespace treedeck
