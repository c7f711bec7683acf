// Command-line front end. Every subcommand writes tab-separated records to
// stdout, preceded by '#' header lines (version, flags, wall time).
//
// Exit status: 0 ok, 1 verification failure, 2 usage, 3 infeasible.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>

#include "treedeck/acceptance.hpp"
#include "treedeck/deck.hpp"
#include "treedeck/enumerate.hpp"
#include "treedeck/extremal.hpp"
#include "treedeck/reconstruct.hpp"
#include "treedeck/universal.hpp"

#ifndef TREEDECK_VERSION
#define TREEDECK_VERSION "dev"
#endif

using namespace treedeck;

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2, infeasible = 3 };

struct Outcome {
  std::string body;
  int status = ok;
};

std::string echo_flags(const CLI::App& app) {
  std::string out = app.get_name();
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "--version") continue;
    std::string value;
    if (!opt->results().empty()) {
      for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
    } else {
      value = opt->get_default_str();
    }
    if (value.empty() && opt->get_expected_min() == 0) value = "false";
    out += ' ' + opt->get_name() + '=' + value;
  }
  return out;
}

void print_header(const CLI::App& root, const CLI::App& sub, double seconds) {
  std::cout << "# treedeck " << TREEDECK_VERSION << '\n'
            << "# global " << echo_flags(root) << '\n'
            << "# command " << echo_flags(sub) << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  std::cout << "# wall_time_s " << buf << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decks of rooted binary tree shapes: enumeration, reconstruction, extremal "
               "deck sizes and universal trees.",
               "treedeck"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", TREEDECK_VERSION);

  unsigned threads = 1;
  Limits limits;
  app.add_option("--threads", threads, "Worker threads")->capture_default_str();
  app.add_option("--max-enumeration-size", limits.max_enumeration_size,
                 "Largest n accepted by shape enumeration")
      ->capture_default_str();
  app.add_option("--max-subsets", limits.max_bruteforce_subsets,
                 "Largest C(n,j) accepted by the subset enumerator")
      ->capture_default_str();
  app.add_option("--max-exhaustive-size", limits.max_exhaustive_size,
                 "Largest n accepted by exhaustive sweeps")
      ->capture_default_str();

  std::function<Outcome()> action;
  auto bind = [&action](CLI::App* sub, std::function<Outcome()> f) {
    sub->callback([&action, f] { action = f; });
  };

  // enumerate
  std::size_t enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List all shapes of size n in canonical order");
  enumerate->add_option("--n", enum_n, "Leaf count")->required()->check(CLI::PositiveNumber);
  bind(enumerate, [&] {
    Outcome o;
    const auto stream = all_shapes(enum_n, limits);
    o.body = "count\t" + std::to_string(stream.count()) + "\n";
    for (const auto& t : stream) o.body += to_text(t) + "\n";
    return o;
  });

  // deck / multideck
  std::string tree_text;
  std::size_t deck_j = 0;
  bool bruteforce = false;
  auto* deck_cmd = app.add_subcommand("deck", "Size-j deck of a tree");
  deck_cmd->add_option("--tree", tree_text, "Tree in '(A,B)' / '*' notation")->required();
  deck_cmd->add_option("--j", deck_j, "Deck size")->required()->check(CLI::PositiveNumber);
  bind(deck_cmd, [&] { return Outcome{format_deck(deck(parse_text(tree_text), deck_j))}; });

  auto* multideck_cmd = app.add_subcommand("multideck", "Size-j multideck of a tree");
  multideck_cmd->add_option("--tree", tree_text, "Tree in '(A,B)' / '*' notation")->required();
  multideck_cmd->add_option("--j", deck_j, "Deck size")->required()->check(CLI::PositiveNumber);
  multideck_cmd->add_flag("--bruteforce", bruteforce, "Enumerate leaf subsets instead of the recursion");
  bind(multideck_cmd, [&] {
    const TreeShape t = parse_text(tree_text);
    return Outcome{format_multideck(bruteforce ? multideck_bruteforce(t, deck_j, limits)
                                               : multideck(t, deck_j))};
  });

  // reconstruct
  std::size_t rec_n = 0, rec_j = 0;
  bool use_multideck = false;
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Reconstruction number of size-n trees, or whether size-j decks determine them");
  reconstruct->add_option("--n", rec_n, "Tree size")->required()->check(CLI::Range(4, 64));
  reconstruct->add_option("--j", rec_j, "Only test this deck size (0: find the smallest)")
      ->capture_default_str();
  reconstruct->add_flag("--multideck", use_multideck, "Compare multidecks instead of decks");
  bind(reconstruct, [&] {
    const DeckMode mode = use_multideck ? DeckMode::multideck : DeckMode::deck;
    const Parallelism par{threads};
    Outcome o;
    if (rec_j != 0) {
      const auto r = decks_determine(rec_n, rec_j, mode, limits, par);
      o.body = format_report(r);
      return o;
    }
    const auto r = reconstruction_number(rec_n, mode, limits, par);
    o.body = std::string(use_multideck ? "Rm(" : "R(") + std::to_string(r.n) +
             ")=" + std::to_string(r.value) + "\n";
    if (r.value > 1) o.body += format_report(decks_determine(rec_n, r.value - 1, mode, limits, par));
    return o;
  });

  // counterexample
  std::size_t ce_n = 0;
  auto* counterexample = app.add_subcommand(
      "counterexample", "Two size-n trees with equal size-2k decks, k = ceil(n/4)");
  counterexample->add_option("--n", ce_n, "Tree size")->required()->check(CLI::Range(5, 4096));
  bind(counterexample, [&] {
    const auto f = counterexample_family(ce_n);
    const auto c = verify_counterexample(f);
    std::ostringstream out;
    out << "n\t" << f.n << "\nresidue\t" << f.residue << "\nk\t" << f.k << "\nj\t" << f.deck_size
        << "\nt1\t" << to_text(f.t1) << "\nt2\t" << to_text(f.t2) << '\n';
    if (f.s) out << "s\t" << to_text(*f.s) << '\n';
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "trees_differ\t" << yes(c.trees_differ) << "\ndecks_equal\t" << yes(c.decks_equal)
        << "\ns_is_subtree\t" << yes(c.s_is_subtree) << "\nmultidecks_differ\t"
        << yes(c.multidecks_differ) << "\nvalid\t" << yes(c.valid) << '\n';
    if (c.first_difference) out << "first_difference\t" << to_text(*c.first_difference) << '\n';
    return Outcome{out.str(), c.valid ? ok : verification_failed};
  });

  // extremal
  std::size_t ext_n = 0;
  std::string quantity = "max-deck";
  const std::map<std::string, Quantity> quantities = {{"max-deck", Quantity::max_deck},
                                                      {"min-subtrees", Quantity::min_subtrees},
                                                      {"singleton", Quantity::singleton_deck}};
  auto* extremal = app.add_subcommand("extremal", "Exhaustive extremal deck statistics");
  extremal->add_option("--n", ext_n, "Tree size")->required()->check(CLI::PositiveNumber);
  extremal->add_option("--quantity", quantity, "max-deck | min-subtrees | singleton")
      ->required()
      ->check(CLI::IsMember({"max-deck", "min-subtrees", "singleton"}));
  bind(extremal, [&] {
    const Parallelism par{threads};
    ExtremalReport r;
    switch (quantities.at(quantity)) {
      case Quantity::max_deck: r = max_deck_bruteforce(ext_n, limits, par); break;
      case Quantity::min_subtrees: r = min_subtrees_bruteforce(ext_n, limits, par); break;
      case Quantity::singleton_deck: r = singleton_deck_shapes(ext_n, limits, par); break;
    }
    return Outcome{format_report(r), r.verified ? ok : verification_failed};
  });

  // universal
  std::size_t uk = 0;
  SearchOptions search;
  if (const char* env = std::getenv("TREEDECK_CACHE")) search.cache_path = env;
  auto* universal = app.add_subcommand("universal", "Minimum size of a k-universal tree");
  universal->add_option("--k", uk, "Deck size k")->required()->check(CLI::PositiveNumber);
  universal->add_option("--max-size", search.max_size, "Largest tree size to scan (0: none)")
      ->capture_default_str();
  universal->add_option("--budget", search.budget_seconds, "Seconds before falling back (0: none)")
      ->capture_default_str();
  universal->add_option("--cache", search.cache_path, "Checkpoint log (default $TREEDECK_CACHE)")
      ->capture_default_str();
  bind(universal, [&] {
    search.parallelism = Parallelism{threads};
    return Outcome{format_certificate(min_universal_size(uk, search))};
  });

  // kalmar
  std::size_t kalmar_upto = 12;
  auto* kalmar = app.add_subcommand("kalmar", "Partial sums of ordered factorization counts");
  kalmar->add_option("--upto", kalmar_upto, "Number of terms")->capture_default_str()->check(
      CLI::PositiveNumber);
  bind(kalmar, [&] {
    const auto s = kalmar_terms(kalmar_upto);
    std::string body;
    for (std::size_t i = 0; i < s.terms.size(); ++i)
      body += std::to_string(i + 1) + "\t" + std::to_string(s.factorizations[i]) + "\t" +
              std::to_string(s.terms[i]) + "\n";
    return Outcome{body};
  });

  // table
  std::size_t table_k = 12;
  SearchOptions table_search;
  auto* table = app.add_subcommand("table", "u(k) next to the Kalmar partial sums");
  table->add_option("--max-k", table_k, "Largest k")->capture_default_str()->check(
      CLI::PositiveNumber);
  table->add_option("--budget", table_search.budget_seconds, "Seconds per k (0: none)")
      ->capture_default_str();
  bind(table, [&] {
    table_search.parallelism = Parallelism{threads};
    return Outcome{format_universal_table(compute_universal_table(table_k, table_search))};
  });

  // verify-all
  std::string level = "quick";
  std::vector<int> only;
  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--level", level, "quick | full")
      ->capture_default_str()
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--only", only, "Criteria to run (1..13)");
  bind(verify, [&] {
    SuiteOptions opts;
    opts.level = level == "full" ? SuiteLevel::full : SuiteLevel::quick;
    opts.parallelism = Parallelism{threads};
    opts.only = only;
    Outcome o;
    for (const auto& r : run_suite(opts)) {
      o.body += summary_line(r) + "\n";
      if (!r.passed) {
        o.body += r.body;
        o.status = verification_failed;
      }
    }
    return o;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : usage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << " (estimated work " << e.estimate() << ")\n";
    return infeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return verification_failed;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  print_header(app, *app.get_subcommands().front(), seconds);
  std::cout << outcome.body << std::flush;
  return outcome.status;
}
