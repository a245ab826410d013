// Command-line front end: load a semigroup (built-in fixture or JSON spec),
// build any of the derived structures, and export it as JSON, DOT, or TSV.
//
// Exit codes: 0 success, 1 bad input, 2 failed invariant or failed check,
// 3 resource limit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "holonomy/fixtures.hpp"
#include "holonomy/io/dot.hpp"
#include "holonomy/io/json.hpp"
#include "holonomy/verify.hpp"

namespace {

using holonomy::InputError;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot open output file '" + out_path + "'");
  out << text;
}

struct SourceArgs {
  std::string fixture;
  std::string spec;

  holonomy::FiniteSemigroup load() const {
    if (!fixture.empty() && !spec.empty())
      throw InputError("choose either --fixture or --spec, not both");
    if (!fixture.empty()) return holonomy::fixture_semigroup(fixture);
    if (!spec.empty())
      return holonomy::semigroup_from_json_text(read_file(spec));
    throw InputError("one of --fixture or --spec is required");
  }

  void attach(CLI::App* sub) {
    sub->add_option("--fixture", fixture,
                    "built-in input: lz2, t2, or sem41");
    sub->add_option("--spec", spec, "path to a JSON semigroup spec");
  }
};

holonomy::Side parse_side(const std::string& s) {
  if (s == "left") return holonomy::Side::left;
  if (s == "right") return holonomy::Side::right;
  throw InputError("side must be 'left' or 'right', got '" + s + "'");
}

holonomy::KRSemigroup build_expansion(const holonomy::FiniteSemigroup& s,
                                      const std::string& side,
                                      std::size_t cap) {
  return parse_side(side) == holonomy::Side::left
             ? holonomy::build_kr_left(s, cap)
             : holonomy::build_kr_right(s, cap);
}

std::string semigroup_tsv(const holonomy::FiniteSemigroup& s) {
  std::string out = ".";
  for (const auto& n : s.names) out += "\t" + n;
  out += "\n";
  for (holonomy::ElementIndex x = 0; x < s.size(); ++x) {
    out += s.name(x);
    for (holonomy::ElementIndex y = 0; y < s.size(); ++y)
      out += "\t" + s.name(s.mul(x, y));
    out += "\n";
  }
  return out;
}

std::string length_table_tsv(const holonomy::LengthContext& ctx) {
  std::string out = ".";
  for (holonomy::ElementIndex i = 0; i < ctx.size(); ++i)
    out += "\t" + ctx.T.class_name(i);
  out += "\n";
  for (holonomy::ElementIndex a = 0; a < ctx.size(); ++a) {
    out += ctx.T.class_name(a);
    for (holonomy::ElementIndex b = 0; b < ctx.size(); ++b)
      out += "\t" + std::to_string(ctx.D[a][b]);
    out += "\n";
  }
  return out;
}

std::string code_tsv(const holonomy::SemaphoreCode& code) {
  std::string out = "word";
  for (const auto& tok : code.alphabet.tokens) out += "\t" + tok;
  out += "\n";
  for (holonomy::ElementIndex i = 0; i < code.size(); ++i) {
    out += code.words[i];
    for (holonomy::LetterIndex a = 0; a < code.alphabet.size(); ++a)
      out += "\t" + code.words[code.action[i][a]];
    out += "\n";
  }
  return out;
}

void expect_format(const std::string& format,
                   const std::vector<std::string>& allowed) {
  for (const auto& f : allowed)
    if (format == f) return;
  std::string msg = "format '" + format + "' not supported here (expected";
  for (const auto& f : allowed) msg += " " + f;
  throw InputError(msg + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Expansions of finite semigroups, their length functions, rooted "
      "trees, and elliptic representations"};
  app.require_subcommand(1);
  int exit_status = 0;

  // --- semigroup -----------------------------------------------------------
  auto* sg = app.add_subcommand("semigroup",
                                "export the semigroup itself");
  SourceArgs sg_src;
  sg_src.attach(sg);
  std::string sg_format = "json", sg_out;
  sg->add_option("--format", sg_format, "json or tsv");
  sg->add_option("--out", sg_out, "output file (default stdout)");
  sg->callback([&] {
    expect_format(sg_format, {"json", "tsv"});
    auto s = sg_src.load();
    write_output(sg_out, sg_format == "json"
                             ? holonomy::json_text(holonomy::semigroup_to_json(s))
                             : semigroup_tsv(s));
  });

  // --- cayley --------------------------------------------------------------
  auto* cay = app.add_subcommand(
      "cayley", "Cayley graph of the semigroup with an identity adjoined");
  SourceArgs cay_src;
  cay_src.attach(cay);
  std::string cay_side = "right", cay_format = "dot", cay_out;
  cay->add_option("--side", cay_side, "left or right (default right)");
  cay->add_option("--format", cay_format, "dot or json");
  cay->add_option("--out", cay_out, "output file (default stdout)");
  cay->callback([&] {
    expect_format(cay_format, {"dot", "json"});
    auto g = holonomy::build_cayley(
        holonomy::adjoin_identity(cay_src.load()), parse_side(cay_side));
    write_output(cay_out, cay_format == "dot"
                              ? holonomy::cayley_to_dot(g)
                              : holonomy::json_text(holonomy::cayley_to_json(g)));
  });

  // --- kr --------------------------------------------------------------
  auto* kr = app.add_subcommand("kr", "the expansion cut to generators");
  SourceArgs kr_src;
  kr_src.attach(kr);
  std::string kr_side = "left", kr_format = "json", kr_out;
  std::size_t kr_cap = holonomy::kDefaultClosureCap;
  kr->add_option("--side", kr_side, "left or right (default left)");
  kr->add_option("--format", kr_format, "json or dot");
  kr->add_option("--out", kr_out, "output file (default stdout)");
  kr->add_option("--cap", kr_cap, "size cap for the construction");
  kr->callback([&] {
    expect_format(kr_format, {"json", "dot"});
    auto t = build_expansion(kr_src.load(), kr_side, kr_cap);
    write_output(kr_out, kr_format == "json"
                             ? holonomy::json_text(holonomy::kr_to_json(t))
                             : holonomy::kr_to_dot(t));
  });

  // --- chiswell --------------------------------------------------------
  auto* ch = app.add_subcommand(
      "chiswell", "length function table or the rooted tree");
  SourceArgs ch_src;
  ch_src.attach(ch);
  std::string ch_side = "left", ch_what = "tree", ch_format, ch_out;
  std::size_t ch_cap = holonomy::kDefaultClosureCap;
  bool ch_hide = false;
  ch->add_option("--side", ch_side, "expansion side (default left)");
  ch->add_option("--what", ch_what, "tree or table (default tree)");
  ch->add_option("--format", ch_format,
                 "tree: dot or json (default dot); table: json or tsv "
                 "(default json)");
  ch->add_option("--out", ch_out, "output file (default stdout)");
  ch->add_option("--cap", ch_cap, "size cap for the construction");
  ch->add_flag("--hide-identity-chain", ch_hide,
               "omit the identity's singleton classes from DOT output");
  ch->callback([&] {
    auto ctx = holonomy::make_length_context(
        build_expansion(ch_src.load(), ch_side, ch_cap));
    if (ch_what == "table") {
      if (ch_format.empty()) ch_format = "json";
      expect_format(ch_format, {"json", "tsv"});
      write_output(ch_out,
                   ch_format == "json"
                       ? holonomy::json_text(holonomy::length_table_to_json(ctx))
                       : length_table_tsv(ctx));
      return;
    }
    if (ch_what != "tree")
      throw InputError("--what must be 'tree' or 'table', got '" + ch_what +
                       "'");
    if (ch_format.empty()) ch_format = "dot";
    expect_format(ch_format, {"dot", "json"});
    auto tree = holonomy::build_tree(ctx);
    write_output(ch_out,
                 ch_format == "dot"
                     ? holonomy::tree_to_dot(tree, ch_hide)
                     : holonomy::json_text(holonomy::tree_to_json(ctx, tree)));
  });

  // --- act ---------------------------------------------------------------
  auto* act = app.add_subcommand(
      "act", "action of one class on the rooted tree");
  SourceArgs act_src;
  act_src.attach(act);
  std::string act_side = "left", act_action_side = "left", act_word,
      act_format = "dot", act_out;
  std::size_t act_cap = holonomy::kDefaultClosureCap;
  bool act_hide = false;
  act->add_option("--side", act_side, "expansion side (default left)");
  act->add_option("--action-side", act_action_side,
                  "act from the left or the right (default left)");
  act->add_option("--word", act_word,
                  "word over the alphabet naming the acting class (empty "
                  "word = identity)");
  act->add_option("--format", act_format, "dot or json");
  act->add_option("--out", act_out, "output file (default stdout)");
  act->add_option("--cap", act_cap, "size cap for the construction");
  act->add_flag("--hide-identity-chain", act_hide,
                "omit the identity's singleton classes from DOT output");
  act->callback([&] {
    expect_format(act_format, {"dot", "json"});
    auto s = act_src.load();
    auto ctx = holonomy::make_length_context(
        build_expansion(s, act_side, act_cap));
    auto tree = holonomy::build_tree(ctx);
    holonomy::ElementIndex alpha = ctx.T.class_of_word(
        holonomy::parse_word(s.alphabet, act_word));
    auto map = parse_side(act_action_side) == holonomy::Side::left
                   ? holonomy::left_action(ctx, tree, alpha)
                   : holonomy::right_action(ctx, tree, alpha);
    write_output(act_out,
                 act_format == "dot"
                     ? holonomy::action_overlay_to_dot(tree, map, act_hide)
                     : holonomy::json_text(
                           holonomy::elliptic_map_to_json(tree, map)));
  });

  // --- semaphore ---------------------------------------------------------
  auto* sem = app.add_subcommand(
      "semaphore", "suffix code of an ideal and its acting semigroup");
  std::string sem_fixture, sem_alphabet, sem_format = "json", sem_out;
  std::size_t sem_window = 0;
  std::vector<std::string> sem_gens;
  sem->add_option("--fixture", sem_fixture, "built-in input: sem41");
  sem->add_option("--alphabet", sem_alphabet, "letters, e.g. 'ab'");
  sem->add_option("--window", sem_window, "window length k");
  sem->add_option("--gens", sem_gens, "ideal generator words")
      ->delimiter(',');
  sem->add_option("--format", sem_format, "json or tsv");
  sem->add_option("--out", sem_out, "output file (default stdout)");
  sem->callback([&] {
    expect_format(sem_format, {"json", "tsv"});
    holonomy::IdealSpec spec;
    if (!sem_fixture.empty()) {
      if (!sem_alphabet.empty() || sem_window != 0 || !sem_gens.empty())
        throw InputError("--fixture excludes --alphabet/--window/--gens");
      if (sem_fixture != "sem41")
        throw InputError("unknown semaphore fixture '" + sem_fixture + "'");
      spec = holonomy::sem41_spec();
    } else {
      spec = holonomy::IdealSpec{holonomy::make_alphabet(sem_alphabet),
                                 sem_window, sem_gens};
    }
    auto code = holonomy::code_from_ideal(spec);
    if (sem_format == "tsv") {
      write_output(sem_out, code_tsv(code));
      return;
    }
    nlohmann::json j;
    j["code"] = holonomy::code_to_json(code);
    j["acting"] =
        holonomy::semigroup_to_json(holonomy::acting_semigroup(code));
    write_output(sem_out, holonomy::json_text(j));
  });

  // --- verify --------------------------------------------------------------
  auto* ver = app.add_subcommand(
      "verify", "run the law-check suites; exit 2 on any failure");
  SourceArgs ver_src;
  ver_src.attach(ver);
  std::string ver_suite = "all", ver_format = "text", ver_out;
  std::size_t ver_random = 0, ver_points = 4;
  std::uint64_t ver_seed = holonomy::kDefaultSeed;
  ver->add_option("--suite", ver_suite,
                  "core, kr, chiswell, semaphore, or all (default all)");
  ver->add_option("--random", ver_random,
                  "instead of a fixture, sweep N random transformation "
                  "semigroups");
  ver->add_option("--points", ver_points,
                  "point-set size bound for --random (default 4)");
  ver->add_option("--seed", ver_seed, "seed for sampling and --random");
  ver->add_option("--format", ver_format, "text or json");
  ver->add_option("--out", ver_out, "output file (default stdout)");
  ver->callback([&] {
    expect_format(ver_format, {"text", "json"});
    std::vector<holonomy::RunReport> reports;
    if (ver_random > 0) {
      if (ver_points < 1 || ver_points > 6)
        throw InputError("--points must be between 1 and 6");
      reports = holonomy::run_random_sweep(ver_random, ver_points, ver_seed);
    } else {
      std::string subject =
          !ver_src.fixture.empty() ? ver_src.fixture : ver_src.spec;
      if (ver_suite == "semaphore") {
        if (ver_src.fixture != "sem41")
          throw InputError("the semaphore suite needs --fixture sem41");
        reports.push_back(
            holonomy::run_semaphore_suite(holonomy::sem41_spec(), subject));
      } else {
        auto s = ver_src.load();
        if (ver_suite == "core") {
          reports.push_back(holonomy::run_core_suite(s, subject));
        } else if (ver_suite == "kr") {
          reports.push_back(
              holonomy::run_kr_suite(s, holonomy::Side::left, subject, ver_seed));
          reports.push_back(holonomy::run_kr_suite(
              s, holonomy::Side::right, subject, ver_seed));
        } else if (ver_suite == "chiswell") {
          reports.push_back(holonomy::run_chiswell_suite(
              s, holonomy::Side::left, subject, ver_seed));
        } else if (ver_suite == "all") {
          reports = holonomy::run_all_suites(s, subject, ver_seed);
          if (ver_src.fixture == "sem41")
            reports.push_back(holonomy::run_semaphore_suite(
                holonomy::sem41_spec(), subject));
        } else {
          throw InputError("unknown suite '" + ver_suite + "'");
        }
      }
    }
    std::size_t failures = 0, skips = 0, checks = 0;
    for (const auto& r : reports) {
      failures += r.failed();
      skips += r.skipped();
      checks += r.checks.size();
    }
    if (ver_format == "json") {
      write_output(ver_out,
                   holonomy::json_text(holonomy::reports_to_json(reports)));
    } else {
      std::ostringstream os;
      for (const auto& r : reports) holonomy::print_report(os, r);
      os << "summary: " << reports.size() << " reports, " << checks
         << " checks, " << failures << " failures, " << skips << " skips\n";
      write_output(ver_out, os.str());
    }
    if (failures > 0) exit_status = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const holonomy::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return holonomy::InputError::exit_code;
  } catch (const holonomy::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return holonomy::InvariantError::exit_code;
  } catch (const holonomy::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return holonomy::ResourceError::exit_code;
  }
  return exit_status;
}
