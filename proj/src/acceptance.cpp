#include "treedeck/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "treedeck/catalog.hpp"
#include "treedeck/deck.hpp"
#include "treedeck/enumerate.hpp"
#include "treedeck/extremal.hpp"
#include "treedeck/reconstruct.hpp"
#include "treedeck/universal.hpp"

namespace treedeck {

namespace {

class Report {
 public:
  void line(const std::string& s) {
    body_ += s;
    body_ += '\n';
  }

  void expect(bool ok, const std::string& what) {
    line(std::string(ok ? "ok\t" : "FAIL\t") + what);
    ok_ = ok_ && ok;
  }

  template <typename Got, typename Want>
  void equal(const std::string& label, const Got& got, const Want& want) {
    std::ostringstream out;
    const bool ok = got == want;
    out << (ok ? "ok\t" : "FAIL\t") << label << '\t' << got;
    if (!ok) out << "\texpected " << want;
    line(out.str());
    ok_ = ok_ && ok;
  }

  bool ok() const { return ok_; }
  std::string& body() { return body_; }

 private:
  std::string body_;
  bool ok_ = true;
};

struct Context {
  SuiteLevel level;
  Parallelism par;
  bool full() const { return level == SuiteLevel::full; }
};

TreeShape j(const TreeShape& a, const TreeShape& b) { return TreeShape::join(a, b); }

std::string join_counts(const std::vector<Count>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

std::vector<Count> multiplicities(const MultiDeck& d, const std::vector<TreeShape>& order) {
  std::vector<Count> out;
  for (const auto& t : order) out.push_back(d.multiplicity(t));
  return out;
}

// Uniform split of the leaf count at every node.
TreeShape random_shape(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return TreeShape();
  std::uniform_int_distribution<std::size_t> split(1, n - 1);
  const std::size_t a = split(rng);
  return j(random_shape(a, rng), random_shape(n - a, rng));
}

void enumeration(const Context& ctx, Report& r) {
  const std::size_t top = ctx.full() ? 18 : 16;
  for (std::size_t n = 1; n <= top; ++n) {
    const auto stream = all_shapes(n);
    r.equal("W_" + std::to_string(n), Count(stream.count()), wedderburn(n));
    const auto& s = stream.shapes();
    r.expect(std::adjacent_find(s.begin(), s.end(), [](auto& a, auto& b) { return !(a < b); }) ==
                 s.end(),
             "size " + std::to_string(n) + " strictly increasing");
  }
  const TreeShape c1 = caterpillar(1), c2 = caterpillar(2), c3 = caterpillar(3), b2 = complete(2);
  const std::vector<std::vector<TreeShape>> listings = {
      {caterpillar(4), b2},
      {caterpillar(5), j(b2, c1), j(c3, c2)},
      {caterpillar(6), j(j(b2, c1), c1), j(j(c3, c2), c1), j(caterpillar(4), c2), j(b2, c2), j(c3, c3)},
  };
  for (const auto& listing : listings) {
    auto want = listing;
    std::sort(want.begin(), want.end());
    const auto& got = all_shapes(listing.front().size()).shapes();
    r.expect(got == want, "all_shapes(" + std::to_string(listing.front().size()) + ") matches the reference listing");
    for (const auto& t : got) r.line("shape\t" + to_text(t));
  }
}

void multideck_fixtures(const Context&, Report& r) {
  const TreeShape c1 = caterpillar(1), c2 = caterpillar(2), c3 = caterpillar(3), b2 = complete(2);
  const std::vector<TreeShape> four = {caterpillar(4), b2};
  const std::vector<std::pair<TreeShape, std::vector<Count>>> fives = {
      {caterpillar(5), {5, 0}}, {j(b2, c1), {4, 1}}, {j(c3, c2), {2, 3}}};
  DeckCalculator calc;
  for (const auto& [t, want] : fives)
    r.equal(to_text(t), join_counts(multiplicities(calc.multideck(t, 4), four)), join_counts(want));

  // Column order C_5, C_1+B_2, C_2+C_3. The reference data lists (2,1,3)
  // for ((C_3,C_2),C_1); removing one of the three C_3 leaves gives C_1+B_2,
  // so the count is (2,3,1). The projection check below confirms it.
  const std::vector<TreeShape> five = {caterpillar(5), j(b2, c1), j(c3, c2)};
  const TreeShape misprinted = j(j(c3, c2), c1);
  const std::vector<std::pair<TreeShape, std::vector<Count>>> sixes = {
      {caterpillar(6), {6, 0, 0}},   {j(j(b2, c1), c1), {4, 2, 0}},  {misprinted, {2, 3, 1}},
      {j(caterpillar(4), c2), {2, 0, 4}}, {j(b2, c2), {0, 2, 4}}, {j(c3, c3), {0, 0, 6}}};
  for (const auto& [t, want] : sixes)
    r.equal(to_text(t), join_counts(multiplicities(calc.multideck(t, 5), five)), join_counts(want));

  MultiDeck printed(5);
  printed.add(five[0], 2);
  printed.add(five[1], 1);
  printed.add(five[2], 3);
  const MultiDeck truth = multideck_bruteforce(misprinted, 4);
  const MultiDeck from_printed = project_multideck(printed, 4, 6);
  r.expect(!(from_printed == truth), "printed (2,1,3) projects to a wrong size-4 multideck");
  r.expect(project_multideck(calc.multideck(misprinted, 5), 4, 6) == truth,
           "computed (2,3,1) projects to the true size-4 multideck");
  r.line("note\treference triplet (2,1,3) for " + to_text(misprinted) + " corrected to (2,3,1)");
}

void oracle_equivalence(const Context& ctx, Report& r) {
  std::size_t compared = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    DeckCalculator calc;
    for (const auto& t : all_shapes(n))
      for (std::size_t jj = 1; jj <= n; ++jj) {
        ++compared;
        if (!(calc.multideck(t, jj) == multideck_bruteforce(t, jj))) {
          ++mismatches;
          r.line("mismatch\t" + to_text(t) + "\t" + std::to_string(jj));
        }
      }
  }
  r.equal("exhaustive comparisons", compared, compared);
  r.equal("exhaustive mismatches", mismatches, std::size_t{0});

  std::mt19937_64 rng(20240607);
  const std::size_t samples = ctx.full() ? 1000 : 200;
  std::size_t random_mismatches = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
    const std::size_t jj = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 8))(rng);
    const TreeShape t = random_shape(n, rng);
    if (!(multideck(t, jj) == multideck_bruteforce(t, jj))) {
      ++random_mismatches;
      r.line("mismatch\t" + to_text(t) + "\t" + std::to_string(jj));
    }
  }
  r.equal("random samples", samples, samples);
  r.equal("random mismatches", random_mismatches, std::size_t{0});
}

void projection(const Context& ctx, Report& r) {
  const std::size_t top = ctx.full() ? 11 : 9;
  std::size_t checked = 0, failures = 0;
  for (std::size_t n = 2; n <= top; ++n) {
    DeckCalculator calc;
    for (const auto& t : all_shapes(n))
      for (std::size_t jj = 2; jj <= n; ++jj)
        for (std::size_t i = 1; i < jj; ++i) {
          ++checked;
          if (!(project_multideck(calc.multideck(t, jj), i, n) == calc.multideck(t, i))) {
            ++failures;
            r.line("mismatch\t" + to_text(t) + "\t" + std::to_string(i) + "\t" + std::to_string(jj));
          }
        }
  }
  r.line("checked\t" + std::to_string(checked));
  r.equal("projection failures", failures, std::size_t{0});
}

void small_reconstruction(const Context& ctx, Report& r) {
  r.equal("R(4)", reconstruction_number(4, DeckMode::deck, {}, ctx.par).value, std::size_t{4});
  r.equal("R(5)", reconstruction_number(5, DeckMode::deck, {}, ctx.par).value, std::size_t{5});
  r.equal("Rm(4)", reconstruction_number(4, DeckMode::multideck, {}, ctx.par).value, std::size_t{4});
  r.equal("Rm(5)", reconstruction_number(5, DeckMode::multideck, {}, ctx.par).value, std::size_t{4});
  const auto six = decks_determine(6, 5, DeckMode::deck, {}, ctx.par);
  r.expect(six.determined && six.groups == 6, "size-5 decks determine the six size-6 trees");
}

void counterexample_families(const Context& ctx, Report& r) {
  const std::size_t top = ctx.full() ? 40 : 24;
  for (std::size_t n = 6; n <= top; ++n) {
    if (n == 7) {
      r.line("family\t7\tundefined");
      continue;
    }
    const auto f = counterexample_family(n);
    const auto c = verify_counterexample(f);
    r.expect(c.valid && c.trees_differ && c.decks_equal,
             "family n=" + std::to_string(n) + " j=" + std::to_string(f.deck_size) + " " +
                 to_text(f.t1) + " " + to_text(f.t2));
  }
  for (std::size_t n = 4; n <= 11; ++n) {
    const auto rn = reconstruction_number(n, DeckMode::deck, {}, ctx.par);
    const std::size_t bound = 2 * ((n + 3) / 4);
    r.expect(rn.value > bound, "R(" + std::to_string(n) + ")=" + std::to_string(rn.value) + " > " +
                                   std::to_string(bound));
  }
}

void one_less_decks(const Context& ctx, Report& r) {
  const std::size_t top = ctx.full() ? 14 : 12;
  for (std::size_t n = 6; n <= top; ++n) {
    const auto d = decks_determine(n, n - 1, DeckMode::deck, {}, ctx.par);
    r.expect(d.determined && d.groups == d.shapes,
             "n=" + std::to_string(n) + " shapes=" + std::to_string(d.shapes) +
                 " groups=" + std::to_string(d.groups));
  }
}

void singleton_decks(const Context& ctx, Report& r) {
  const std::size_t top = ctx.full() ? 14 : 12;
  for (std::size_t n = 2; n <= top; ++n) {
    const auto rep = singleton_deck_shapes(n, {}, ctx.par);
    std::string names;
    for (const auto& a : rep.achievers) names += " " + to_text(a);
    r.expect(rep.verified, "singleton n=" + std::to_string(n) + names);
  }
  for (std::size_t n = 7; n <= top; ++n)
    r.expect(singleton_jdeck_check(n, {}, ctx.par), "j-deck singletons n=" + std::to_string(n));
}

void min_subtrees(const Context& ctx, Report& r) {
  const std::size_t top = ctx.full() ? 14 : 12;
  for (std::size_t n = 1; n <= top; ++n) {
    const auto rep = min_subtrees_bruteforce(n, {}, ctx.par);
    r.expect(rep.verified, "min S n=" + std::to_string(n) + " value=" + std::to_string(rep.value) +
                               " achievers=" + std::to_string(rep.achievers.size()));
  }
}

void max_deck(const Context& ctx, Report& r) {
  const std::size_t top = ctx.full() ? 16 : 14;
  for (std::size_t n = 3; n <= top; ++n) {
    const auto rep = max_deck_bruteforce(n, {}, ctx.par);
    r.expect(rep.verified, "max deck n=" + std::to_string(n) + " value=" + std::to_string(rep.value) +
                               " g=" + std::to_string(g(n)) +
                               " achievers=" + std::to_string(rep.achievers.size()));
  }
}

void xy_family(const Context& ctx, Report& r) {
  r.equal("S(Y_6)", subtree_count(y_tree(6)), std::size_t{9});
  r.equal("S(Y_10)", subtree_count(y_tree(10)), std::size_t{41});
  r.equal("S(Y_14)", Count(subtree_count(y_tree(14))), s_y_closed_form(14));
  r.equal("closed form m=14", s_y_closed_form(14), Count(201));
  const std::size_t top = ctx.full() ? 30 : 22;
  for (std::size_t m = 6; m <= top; m += 4)
    r.equal("S(Y_" + std::to_string(m) + ") via recurrence", s_y_from_recurrence(m, 9, 41),
            s_y_closed_form(m));
  r.expect(verify_xy_recurrences(5), "recurrences n=5");
  r.expect(verify_xy_recurrences(9), "recurrences n=9");
}

void universality(const Context& ctx, Report& r) {
  const std::vector<std::size_t> u = {1, 2, 3, 5, 6, 9, 10, 14, 16, 19, 21};
  const std::vector<std::size_t> witnesses = {0, 0, 0, 2, 1, 6, 1, 8, 8, 2, 1};
  SearchOptions opts;
  opts.parallelism = ctx.par;
  for (std::size_t k = 1; k <= 11; ++k) {
    const auto c = min_universal_size(k, opts);
    r.expect(c.exhaustive, "u(" + std::to_string(k) + ") exhaustive");
    r.equal("u(" + std::to_string(k) + ")", c.u_value, u[k - 1]);
    if (k >= 4) r.equal("witnesses k=" + std::to_string(k), c.witnesses.size(), witnesses[k - 1]);
    for (const auto& w : c.witnesses) r.line("witness\t" + std::to_string(k) + "\t" + to_text(w));
    for (const auto& e : catalog_for(k)) {
      const bool listed = std::binary_search(c.witnesses.begin(), c.witnesses.end(), e.tree);
      r.expect(listed && e.tree.size() == e.size, e.name + " is a minimal witness");
    }
  }
  const TreeShape b = universal_12_tree();
  r.equal("28-leaf tree size", b.size(), std::size_t{28});
  r.expect(is_universal(b, 12), "28-leaf tree is 12-universal");
  const auto c12 = min_universal_size(12, opts);
  r.expect(!c12.exhaustive && c12.u_value == 28, "u(12) <= 28 without exhaustive search");

  const std::vector<std::uint64_t> kalmar = {1, 2, 3, 5, 6, 9, 10, 14, 16, 19, 20, 28};
  const auto ks = kalmar_terms(12);
  for (std::size_t k = 1; k <= 12; ++k)
    r.equal("kalmar(" + std::to_string(k) + ")", ks.term(k), kalmar[k - 1]);
  for (std::size_t k = 1; k <= 11; ++k)
    r.line("compare\t" + std::to_string(k) + "\t" + std::to_string(u[k - 1]) + "\t" +
           std::to_string(ks.term(k)) + (u[k - 1] == ks.term(k) ? "\tequal" : "\tdiffer"));
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(const Context&, Report&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "enumeration", 5, enumeration},
      {2, "multideck fixtures", 1, multideck_fixtures},
      {3, "oracle equivalence", 120, oracle_equivalence},
      {4, "multideck projection", 60, projection},
      {5, "small reconstruction numbers", 10, small_reconstruction},
      {6, "counterexample families", 600, counterexample_families},
      {7, "one-less decks determine trees", 600, one_less_decks},
      {8, "singleton decks", 300, singleton_decks},
      {9, "minimum subtree count", 300, min_subtrees},
      {10, "maximum deck size", 900, max_deck},
      {11, "X/Y subtree counts", 120, xy_family},
      {12, "universal trees", 4 * 3600, universality},
  };
  return all;
}

CriterionResult run_one(const Criterion& c, const Context& ctx) {
  CriterionResult out;
  out.id = c.id;
  out.title = c.title;
  out.limit_seconds = c.limit_seconds;
  Report r;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(ctx, r);
  } catch (const std::exception& e) {
    r.expect(false, std::string("exception: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.passed = r.ok() && out.seconds <= out.limit_seconds;
  out.body = std::move(r.body());
  return out;
}

bool selected(const SuiteOptions& opts, int id) {
  return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), id) != opts.only.end();
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  const Context ctx{opts.level, opts.parallelism};
  std::vector<CriterionResult> results;
  for (const auto& c : criteria())
    if (selected(opts, c.id)) results.push_back(run_one(c, ctx));

  if (selected(opts, 13)) {
    CriterionResult det;
    det.id = 13;
    det.title = "determinism across thread counts";
    Report r;
    const auto start = std::chrono::steady_clock::now();
    const Context one{opts.level, Parallelism{1}};
    const Context many{opts.level, Parallelism{std::max(2u, opts.alternate_threads)}};
    for (const auto& c : criteria()) {
      const auto a = run_one(c, one);
      const auto b = run_one(c, many);
      r.expect(a.body == b.body, "criterion " + std::to_string(c.id) + " report identical (" +
                                     std::to_string(a.body.size()) + " bytes)");
    }
    det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    det.limit_seconds = 0;
    for (const auto& c : criteria()) det.limit_seconds += 2 * c.limit_seconds;
    det.passed = r.ok() && det.seconds <= det.limit_seconds;
    det.body = std::move(r.body());
    results.push_back(std::move(det));
  }
  return results;
}

std::string summary_line(const CriterionResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.2f s", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title +
         "  (" + seconds + ")";
}

}  // namespace treedeck
