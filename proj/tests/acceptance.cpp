// Acceptance criteria as a standalone binary: one criterion per run,
// one PASS/FAIL line on stdout, exit 0 on pass and 1 on fail.
//
//   acceptance --criterion N [--cli PATH]
//
// Criterion 7 exercises the command-line binary and needs --cli.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "golden.hpp"
#include "holonomy/fixtures.hpp"
#include "holonomy/io/dot.hpp"
#include "holonomy/io/json.hpp"
#include "holonomy/verify.hpp"
#include "oracle.hpp"

namespace {

using holonomy::ElementIndex;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// --------------------------------------------------------------------------
// Shared helpers
// --------------------------------------------------------------------------

std::string rep_string(const holonomy::KRSemigroup& t, ElementIndex i) {
  return holonomy::word_to_string(t.base.alphabet, t.elements[i].rep);
}

ElementIndex class_by_rep(const holonomy::KRSemigroup& t,
                          const std::string& rep) {
  for (ElementIndex i = 0; i < t.size(); ++i)
    if (rep_string(t, i) == rep) return i;
  throw holonomy::InputError("no class with representative '" + rep + "'");
}

std::string vertex_key(const holonomy::LengthContext& ctx,
                       const holonomy::ChiswellTree& tree, std::size_t v) {
  ElementIndex least = tree.members[tree.depth(v)][tree.vertex_class[v]][0];
  return std::to_string(tree.depth(v)) + ":" + rep_string(ctx.T, least);
}

golden::ActionMap as_action_map(const holonomy::LengthContext& ctx,
                                const holonomy::ChiswellTree& tree,
                                const holonomy::EllipticMap& m) {
  golden::ActionMap out;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v)
    out[vertex_key(ctx, tree, v)] = vertex_key(ctx, tree, m.img[v]);
  return out;
}

// --------------------------------------------------------------------------
// Criterion 1: the worked code and its full 22-entry action table
// --------------------------------------------------------------------------

Outcome criterion_1() {
  auto code = holonomy::code_from_ideal(holonomy::sem41_spec());
  if (code.words != golden::sem41_code)
    return {false, "code words differ from the frozen 11-word set"};
  std::size_t checked = 0;
  for (const auto& [word, letter, expect] : golden::sem41_action) {
    const std::string& got = holonomy::right_action(code, word, letter);
    if (got != expect)
      return {false, "action entry " + word + "." + letter + " = " + got +
                         ", expected " + expect};
    ++checked;
  }
  if (checked != 22) return {false, "expected 22 frozen action entries"};
  return {true, "11 code words and all 22 action entries match"};
}

// --------------------------------------------------------------------------
// Criterion 2: size of the acting right transformation semigroup
// --------------------------------------------------------------------------

Outcome criterion_2() {
  auto code = holonomy::code_from_ideal(holonomy::sem41_spec());
  auto acting = holonomy::acting_semigroup(code);
  if (acting.size() == golden::sem41_published_acting_size)
    return {true, "acting semigroup has 11 elements"};
  // Count constant maps from the display names "(i1 i2 ...)": a map is
  // constant exactly when all image entries coincide.
  std::size_t constants = 0;
  for (ElementIndex x = 0; x < acting.size(); ++x) {
    std::set<std::string> entries;
    std::string cur;
    for (char c : acting.name(x)) {
      if (c == '(') {
        cur.clear();
      } else if (c == ' ' || c == ')') {
        if (!cur.empty()) entries.insert(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    constants += entries.size() == 1;
  }
  std::ostringstream os;
  os << "expected " << golden::sem41_published_acting_size
     << " elements, computed " << acting.size() << " (" << constants
     << " constant maps and " << acting.size() - constants
     << " others); the closure of the two letter actions necessarily "
        "contains every one of these maps, so no transformation semigroup "
        "reproducing the 22-entry action table has only 11 elements";
  return {false, os.str()};
}

// --------------------------------------------------------------------------
// Criterion 3: the two-letter left-zero example end to end
// --------------------------------------------------------------------------

Outcome criterion_3() {
  auto ctx =
      holonomy::make_length_context(holonomy::build_kr_left(holonomy::make_lz2()));
  std::vector<std::string> reps;
  for (ElementIndex i = 0; i < ctx.T.size(); ++i)
    reps.push_back(rep_string(ctx.T, i));
  if (reps != golden::lz2_kr_left_reps)
    return {false, "expansion classes differ from {1, a, b, ab, ba}"};
  if (ctx.ell != golden::lz2_ell)
    return {false, "ceiling is " + std::to_string(ctx.ell) + ", expected 2"};

  auto tree = holonomy::build_tree(ctx);
  if (tree.vertex_count() != 9) return {false, "tree does not have 9 vertices"};
  if (tree.level_counts() != golden::lz2_tree_levels)
    return {false, "level profile differs from 1,3,5"};

  auto left_a = as_action_map(
      ctx, tree, holonomy::left_action(ctx, tree, class_by_rep(ctx.T, "a")));
  if (left_a.at("1:b") != "1:a")
    return {false, "left action of a does not send [1,b] to [1,a]"};
  if (left_a.at("2:ba") != "2:a")
    return {false, "left action of a does not send [2,ba] to [2,a]"};
  if (left_a != golden::lz2_left_a)
    return {false, "left action of a differs from the frozen map"};

  auto right_a = as_action_map(
      ctx, tree, holonomy::right_action(ctx, tree, class_by_rep(ctx.T, "a")));
  if (right_a != golden::lz2_right_a)
    return {false, "right action of a differs from the frozen map"};
  auto right_b = as_action_map(
      ctx, tree, holonomy::right_action(ctx, tree, class_by_rep(ctx.T, "b")));
  if (right_b != golden::lz2_right_b)
    return {false, "right action of b differs from the frozen map"};

  return {true,
          "classes {1,a,b,ab,ba}, ceiling 2, 9-vertex tree (1,3,5), and all "
          "frozen action maps match arrow for arrow"};
}

// --------------------------------------------------------------------------
// Criterion 4: the full transformation monoid on two points
// --------------------------------------------------------------------------

Outcome criterion_4() {
  auto s = holonomy::make_t2();
  auto g = holonomy::build_cayley(holonomy::adjoin_identity(s),
                                  holonomy::Side::left);
  std::set<std::tuple<std::string, std::string, std::string>> got;
  for (const holonomy::Edge& e : g.transition_edges())
    got.insert({g.monoid.name(e.source), g.monoid.alphabet.token(e.letter),
                g.monoid.name(e.target)});
  std::set<std::tuple<std::string, std::string, std::string>> expect(
      golden::t2_left_transitions.begin(), golden::t2_left_transitions.end());
  if (got != expect)
    return {false, "left-graph transition edges differ from the frozen four"};

  auto t = holonomy::build_kr_left(s);
  std::vector<std::string> reps;
  for (ElementIndex i = 0; i < t.size(); ++i)
    reps.push_back(rep_string(t, i));
  if (reps != golden::t2_kr_left_reps)
    return {false, "expansion classes differ from {1, a, b, aa, ab, aab}"};

  auto ctx = holonomy::make_length_context(std::move(t));
  if (ctx.ell != golden::t2_ell)
    return {false, "ceiling is " + std::to_string(ctx.ell) + ", expected 4"};
  return {true,
          "4 transition edges, classes {1,a,b,aa,ab,aab}, and ceiling 4"};
}

// --------------------------------------------------------------------------
// Criterion 5: independent brute-force reference agrees on T2
// --------------------------------------------------------------------------

Outcome criterion_5() {
  auto ctx = holonomy::make_length_context(
      holonomy::build_kr_left(holonomy::make_t2()));
  auto tree = holonomy::build_tree(ctx);

  // The reference implementation recomputes everything from scratch.
  oracle::RawSemigroup raw;
  {
    auto s = holonomy::make_t2();
    raw.n = s.size();
    raw.table.assign(s.size() * s.size(), 0);
    for (ElementIndex x = 0; x < s.size(); ++x)
      for (ElementIndex y = 0; y < s.size(); ++y)
        raw.table[x * s.size() + y] = s.mul(x, y);
    raw.gens = {0, 1};
    raw.names = s.names;
  }
  auto base = oracle::opposite(oracle::adjoin_one(raw));
  auto kr = oracle::build_kr_right(base, 2, 100000);
  auto h = oracle::heights(base);
  std::size_t maxh = 0;
  for (auto v : h) maxh = std::max(maxh, v);
  std::size_t ell = 2 * maxh;
  if (ell != ctx.ell) return {false, "reference disagrees on the ceiling"};
  if (kr.classes.size() != ctx.size())
    return {false, "reference disagrees on the number of classes"};

  // Match classes by representative word.
  std::map<std::string, std::size_t> oracle_by_rep;
  for (std::size_t i = 0; i < kr.classes.size(); ++i) {
    std::string rep;
    for (auto a : kr.classes[i].rep) rep += static_cast<char>('a' + a);
    oracle_by_rep[rep] = i;
  }
  std::vector<std::size_t> to_oracle(ctx.size());
  for (ElementIndex i = 0; i < ctx.size(); ++i) {
    auto it = oracle_by_rep.find(rep_string(ctx.T, i));
    if (it == oracle_by_rep.end())
      return {false, "reference lacks class '" + rep_string(ctx.T, i) + "'"};
    to_oracle[i] = it->second;
  }

  std::size_t pairs = 0;
  for (ElementIndex a = 0; a < ctx.size(); ++a)
    for (ElementIndex b = 0; b < ctx.size(); ++b) {
      std::size_t expect =
          oracle::length_D(kr, h, ell, to_oracle[a], to_oracle[b]);
      if (ctx.D[a][b] != expect)
        return {false, "reference disagrees at D(" + rep_string(ctx.T, a) +
                           ", " + rep_string(ctx.T, b) + ")"};
      ++pairs;
    }

  auto otree = oracle::build_tree(kr, h, ell);
  std::size_t levels_checked = 0;
  for (std::size_t k = 0; k <= ell; ++k) {
    for (ElementIndex a = 0; a < ctx.size(); ++a)
      for (ElementIndex b = 0; b < ctx.size(); ++b) {
        bool lib = tree.class_of[k][a] == tree.class_of[k][b];
        bool ref = otree.level_class[k][to_oracle[a]] ==
                   otree.level_class[k][to_oracle[b]];
        if (lib != ref)
          return {false, "reference disagrees on the level-" +
                             std::to_string(k) + " partition"};
      }
    ++levels_checked;
  }
  return {true, "reference agrees on all " + std::to_string(pairs) +
                    " length values and all " +
                    std::to_string(levels_checked) + " tree levels"};
}

// --------------------------------------------------------------------------
// Criterion 6: law suites on the three inputs and a 20-instance sweep
// --------------------------------------------------------------------------

Outcome criterion_6() {
  std::vector<holonomy::RunReport> reports;
  for (const char* name : {"lz2", "t2", "sem41"}) {
    auto batch = holonomy::run_all_suites(holonomy::fixture_semigroup(name),
                                          name);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  reports.push_back(
      holonomy::run_semaphore_suite(holonomy::sem41_spec(), "sem41"));
  auto sweep = holonomy::run_random_sweep(20, 4);
  reports.insert(reports.end(), sweep.begin(), sweep.end());

  std::size_t checks = 0, failures = 0, skips = 0;
  for (const auto& r : reports) {
    checks += r.checks.size();
    failures += r.failed();
    skips += r.skipped();
  }
  if (failures > 0) {
    for (const auto& r : reports)
      if (!r.pass()) {
        for (const auto& c : r.checks)
          if (!c.pass && !c.skipped)
            return {false, r.subject + ": " + c.name +
                               (c.detail.empty() ? "" : " — " + c.detail)};
      }
  }
  std::ostringstream os;
  os << reports.size() << " reports, " << checks << " checks, 0 violations ("
     << skips << " size- or regularity-gated skips) across 3 worked inputs "
     << "and 20 seeded random transformation semigroups";
  return {true, os.str()};
}

// --------------------------------------------------------------------------
// Criterion 7: the command line is deterministic, byte for byte
// --------------------------------------------------------------------------

std::string run_cli(const std::string& cli, const std::string& args,
                    const std::string& sink, bool* ok) {
  std::string cmd = cli + " " + args + " > " + sink + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  *ok = rc == 0;
  std::ifstream in(sink);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome criterion_7(const std::string& cli) {
  if (cli.empty()) return {false, "needs --cli PATH to the command line"};
  std::vector<std::string> commands;
  for (const std::string f : {"lz2", "t2", "sem41"}) {
    for (const std::string fmt : {"json", "tsv"})
      commands.push_back("semigroup --fixture " + f + " --format " + fmt);
    for (const std::string side : {"left", "right"}) {
      commands.push_back("cayley --fixture " + f + " --side " + side +
                         " --format dot");
      commands.push_back("kr --fixture " + f + " --side " + side +
                         " --format json");
    }
    commands.push_back("kr --fixture " + f + " --format dot");
    commands.push_back("chiswell --fixture " + f + " --what tree --format dot");
    commands.push_back("chiswell --fixture " + f +
                       " --what tree --format json");
    commands.push_back("chiswell --fixture " + f +
                       " --what table --format json");
    commands.push_back("chiswell --fixture " + f +
                       " --what table --format tsv");
    commands.push_back("act --fixture " + f + " --word a --format dot");
    commands.push_back("act --fixture " + f +
                       " --word ab --action-side right --format json");
  }
  commands.push_back("semaphore --fixture sem41 --format json");
  commands.push_back("semaphore --fixture sem41 --format tsv");

  std::size_t total_bytes = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    bool ok1 = false, ok2 = false;
    std::string first =
        run_cli(cli, commands[i], "/tmp/acceptance7_a.out", &ok1);
    std::string second =
        run_cli(cli, commands[i], "/tmp/acceptance7_b.out", &ok2);
    if (!ok1 || !ok2)
      return {false, "command failed: " + commands[i]};
    if (first.empty())
      return {false, "command produced no output: " + commands[i]};
    if (first != second)
      return {false, "outputs differ between runs: " + commands[i]};
    total_bytes += first.size();
  }
  return {true, std::to_string(commands.size()) +
                    " commands run twice each, " +
                    std::to_string(total_bytes) +
                    " bytes per sweep, byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc)
      criterion = std::atoi(argv[++i]);
    else if (arg == "--cli" && i + 1 < argc)
      cli = argv[++i];
    else {
      std::cerr << "usage: acceptance --criterion N [--cli PATH]\n";
      return 1;
    }
  }
  if (criterion < 1 || criterion > 7) {
    std::cerr << "usage: acceptance --criterion N (1..7) [--cli PATH]\n";
    return 1;
  }

  // Wall-clock budgets per criterion, seconds.
  const double budgets[8] = {0, 1.0, 5.0, 1.0, 1.0, 5.0, 60.0, 120.0};

  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    switch (criterion) {
      case 1: outcome = criterion_1(); break;
      case 2: outcome = criterion_2(); break;
      case 3: outcome = criterion_3(); break;
      case 4: outcome = criterion_4(); break;
      case 5: outcome = criterion_5(); break;
      case 6: outcome = criterion_6(); break;
      case 7: outcome = criterion_7(cli); break;
    }
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (outcome.pass && seconds > budgets[criterion]) {
    outcome.pass = false;
    outcome.detail = "over time budget (" + std::to_string(seconds) + "s > " +
                     std::to_string(budgets[criterion]) + "s)";
  }

  char timing[32];
  std::snprintf(timing, sizeof timing, " [%.2fs]", seconds);
  std::cout << "criterion " << criterion << ": "
            << (outcome.pass ? "PASS" : "FAIL") << " — " << outcome.detail
            << timing << "\n";
  return outcome.pass ? 0 : 1;
}
