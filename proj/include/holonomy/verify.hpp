#pragma once

// Verification suites: the algebraic laws of every module, run exhaustively
// on small inputs and by seeded sampling on large ones, plus the randomized
// regression sweep over transformation semigroups.

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "holonomy/cayley.hpp"
#include "holonomy/chiswell.hpp"
#include "holonomy/core.hpp"
#include "holonomy/greens.hpp"
#include "holonomy/kr.hpp"
#include "holonomy/semaphore.hpp"
#include "holonomy/semigroup.hpp"

namespace holonomy {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Exhaustive/sampled switch points. Triples are exhaustive up to 60 classes
// (the published switch point); larger structures get 10^4 random samples.
inline constexpr std::size_t kExhaustiveTriples = 60;
inline constexpr std::size_t kExhaustivePairs = 300;
inline constexpr std::size_t kSamples = 10000;
// Cost walls for the heavyweight checks on large random instances.
inline constexpr std::size_t kContextBound = 2000;
inline constexpr std::size_t kTreeBound = 1200;
inline constexpr std::size_t kRepresentationFullBound = 150;
inline constexpr std::size_t kHeightTransferBound = 600;

struct RunReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass && !c.skipped) return false;
    return true;
  }
  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += !c.pass && !c.skipped;
    return n;
  }
  std::size_t skipped() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.skipped;
    return n;
  }
};

namespace detail {

// Run one check with wall-clock timing.
inline void timed(RunReport& report,
                  const std::function<CheckResult()>& check) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r = check();
  auto stop = std::chrono::steady_clock::now();
  r.millis =
      std::chrono::duration<double, std::milli>(stop - start).count();
  report.checks.push_back(std::move(r));
}

// Visit either all pairs (a,b) or `kSamples` random ones.
template <typename Fn>
inline bool for_pairs(std::size_t n, std::mt19937_64& rng, Fn fn,
                      bool exhaustive) {
  if (exhaustive) {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        if (!fn(a, b)) return false;
    return true;
  }
  std::uniform_int_distribution<ElementIndex> pick(
      0, static_cast<ElementIndex>(n - 1));
  for (std::size_t i = 0; i < kSamples; ++i)
    if (!fn(pick(rng), pick(rng))) return false;
  return true;
}

template <typename Fn>
inline bool for_triples(std::size_t n, std::mt19937_64& rng, Fn fn,
                        bool exhaustive) {
  if (exhaustive) {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        for (ElementIndex c = 0; c < n; ++c)
          if (!fn(a, b, c)) return false;
    return true;
  }
  std::uniform_int_distribution<ElementIndex> pick(
      0, static_cast<ElementIndex>(n - 1));
  for (std::size_t i = 0; i < kSamples; ++i)
    if (!fn(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

inline std::string scope_note(bool exhaustive, const char* what) {
  return exhaustive ? std::string("exhaustive over all ") + what
                    : "sampled " + std::to_string(kSamples) + " " + what;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Core suite: associativity, generation, heights, stability, duality
// ---------------------------------------------------------------------------

inline RunReport run_core_suite(const FiniteSemigroup& s,
                                const std::string& subject) {
  RunReport report{"core on " + subject, {}};
  FiniteSemigroup m = adjoin_identity(s);
  GreensStructure g = greens(m);

  detail::timed(report, [&]() -> CheckResult {
    if (s.size() > kAssociativityBound)
      return CheckResult::skip("associativity",
                               "skipped above " +
                                   std::to_string(kAssociativityBound) +
                                   " elements");
    for (ElementIndex x = 0; x < s.size(); ++x)
      for (ElementIndex y = 0; y < s.size(); ++y)
        for (ElementIndex z = 0; z < s.size(); ++z)
          if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z)))
            return CheckResult::fail("associativity",
                                     "(" + s.name(x) + " " + s.name(y) + ") " +
                                         s.name(z) + " differs");
    return CheckResult::ok("associativity");
  });

  detail::timed(report, [&]() -> CheckResult {
    // BFS from the generators: every element must appear within |S| steps,
    // i.e. as the value of a word of length at most |S|.
    std::vector<std::size_t> depth(s.size(), 0);
    std::vector<bool> seen(s.size(), false);
    std::vector<ElementIndex> queue;
    for (ElementIndex gidx : s.theta)
      if (!seen[gidx]) {
        seen[gidx] = true;
        depth[gidx] = 1;
        queue.push_back(gidx);
      }
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (ElementIndex gidx : s.theta) {
        ElementIndex p = s.mul(queue[i], gidx);
        if (!seen[p]) {
          seen[p] = true;
          depth[p] = depth[queue[i]] + 1;
          queue.push_back(p);
        }
      }
    for (ElementIndex x = 0; x < s.size(); ++x) {
      if (!seen[x])
        return CheckResult::fail("generation", s.name(x) + " unreachable");
      if (depth[x] > s.size())
        return CheckResult::fail("generation",
                                 s.name(x) + " needs a word longer than |S|");
    }
    return CheckResult::ok("generation",
                           "every element is a word of length <= |S|");
  });

  detail::timed(report, [&]() -> CheckResult {
    if (g.heights[*m.identity_index] != 0)
      return CheckResult::fail("identity height", "h(1) != 0");
    return CheckResult::ok("identity height");
  });

  detail::timed(report, [&]() -> CheckResult {
    // Strict order in any of the three quasi-orders drops the height.
    auto strict = [&](const std::vector<std::vector<bool>>& leq,
                      ElementIndex a, ElementIndex b) {
      return leq[a][b] && !leq[b][a];
    };
    for (ElementIndex a = 0; a < m.size(); ++a)
      for (ElementIndex b = 0; b < m.size(); ++b)
        if ((strict(g.leq_r, a, b) || strict(g.leq_l, a, b) ||
             strict(g.leq_j, a, b)) &&
            !(g.heights[a] > g.heights[b]))
          return CheckResult::fail(
              "strict order drops height",
              m.name(a) + " strictly below " + m.name(b) +
                  " but h does not increase");
    return CheckResult::ok("strict order drops height");
  });

  detail::timed(report, [&]() -> CheckResult {
    std::vector<bool> attained(g.max_height() + 1, false);
    for (std::size_t h : g.heights) attained[h] = true;
    for (std::size_t h = 0; h < attained.size(); ++h)
      if (!attained[h])
        return CheckResult::fail("height contiguity",
                                 "no element of height " + std::to_string(h));
    return CheckResult::ok("height contiguity");
  });

  detail::timed(report, [&]() { return check_stability(m, g); });

  detail::timed(report, [&]() -> CheckResult {
    GreensStructure go = greens(adjoin_identity(opposite(s)));
    if (go.leq_r != g.leq_l || go.leq_l != g.leq_r)
      return CheckResult::fail("opposite duality",
                               "R/L of the opposite do not swap");
    return CheckResult::ok("opposite duality");
  });

  detail::timed(report, [&]() -> CheckResult {
    for (ElementIndex x = 0; x < m.size(); ++x) {
      if (m.mul(x, *m.identity_index) != x || m.mul(*m.identity_index, x) != x)
        return CheckResult::fail("identity freshness",
                                 "identity does not act trivially");
      if (x != *m.identity_index) {
        bool same = true;
        for (ElementIndex y = 0; y < m.size(); ++y)
          same &= m.mul(x, y) == m.mul(*m.identity_index, y) &&
                  m.mul(y, x) == m.mul(y, *m.identity_index);
        if (same)
          return CheckResult::fail("identity freshness",
                                   m.name(x) + " duplicates the identity row");
      }
    }
    return CheckResult::ok("identity freshness");
  });

  return report;
}

// ---------------------------------------------------------------------------
// Expansion suite
// ---------------------------------------------------------------------------

inline RunReport run_kr_suite(const FiniteSemigroup& s, Side side,
                              const std::string& subject,
                              std::uint64_t seed = kDefaultSeed) {
  RunReport report{std::string("expansion (") + side_name(side) + ") on " +
                       subject,
                   {}};
  std::mt19937_64 rng(seed);
  KRSemigroup t = side == Side::left ? build_kr_left(s) : build_kr_right(s);
  std::size_t n = t.size();
  bool pair_exhaustive = n <= kExhaustivePairs;

  detail::timed(report, [&]() -> CheckResult {
    for (ElementIndex i = 0; i < n; ++i)
      if (t.elements[i].transitions.empty() != (i == t.identity()))
        return CheckResult::fail("empty history only at identity",
                                 "class " + t.class_name(i));
    return CheckResult::ok("empty history only at identity");
  });

  detail::timed(report, [&]() -> CheckResult {
    // Histories strictly R-decrease at endpoints and are bounded by the
    // number of R-classes of the base.
    std::size_t r_classes = 0;
    {
      std::vector<bool> seen(t.base.size(), false);
      for (ElementIndex a = 0; a < t.base.size(); ++a) {
        if (seen[a]) continue;
        ++r_classes;
        for (ElementIndex b = a; b < t.base.size(); ++b)
          if (t.base_greens.leq_r[a][b] && t.base_greens.leq_r[b][a])
            seen[b] = true;
      }
    }
    for (const KRElement& e : t.elements) {
      if (e.transitions.size() > r_classes)
        return CheckResult::fail("history bound", "class exceeds R-class count");
      for (std::size_t k = 1; k < e.transitions.size(); ++k) {
        ElementIndex hi = e.transitions[k - 1].target;
        ElementIndex lo = e.transitions[k].target;
        if (!(t.base_greens.leq_r[lo][hi] && !t.base_greens.leq_r[hi][lo]))
          return CheckResult::fail("history bound",
                                   "endpoints do not strictly R-decrease");
      }
    }
    return CheckResult::ok("history bound");
  });

  detail::timed(report, [&]() -> CheckResult {
    for (ElementIndex i = 0; i < n; ++i) {
      const KRElement& e = t.elements[i];
      if (evaluate_word(t.base, e.rep) != e.image)
        return CheckResult::fail("representative coherence",
                                 "rep of " + t.class_name(i) +
                                     " evaluates elsewhere");
      if (transitions_of_word(t.graph, e.rep) != e.transitions)
        return CheckResult::fail("representative coherence",
                                 "rep of " + t.class_name(i) +
                                     " has a different history");
    }
    return CheckResult::ok("representative coherence");
  });

  detail::timed(report, [&]() -> CheckResult {
    bool ok = detail::for_pairs(
        n, rng,
        [&](ElementIndex x, ElementIndex y) {
          return t.phi(t.multiply(x, y)) == t.base.mul(t.phi(x), t.phi(y));
        },
        pair_exhaustive);
    return ok ? CheckResult::ok("projection is a homomorphism",
                                detail::scope_note(pair_exhaustive, "pairs"))
              : CheckResult::fail("projection is a homomorphism", "mismatch");
  });

  detail::timed(report, [&]() -> CheckResult {
    std::vector<bool> hit(t.base.size(), false);
    for (ElementIndex i = 0; i < n; ++i) hit[t.phi(i)] = true;
    for (ElementIndex x = 0; x < t.base.size(); ++x)
      if (!hit[x])
        return CheckResult::fail("projection onto",
                                 "misses " + t.base.name(x));
    return CheckResult::ok("projection onto");
  });

  detail::timed(report, [&]() -> CheckResult {
    // Word classes form a congruence: the class of a concatenation is the
    // product of the classes, for random words and random split points.
    std::uniform_int_distribution<std::size_t> len(0, 12);
    std::uniform_int_distribution<LetterIndex> letter(
        0, static_cast<LetterIndex>(s.alphabet.size() - 1));
    for (int trial = 0; trial < 500; ++trial) {
      Word w(len(rng));
      for (auto& a : w) a = letter(rng);
      std::uniform_int_distribution<std::size_t> cut(0, w.size());
      std::size_t c = cut(rng);
      Word u(w.begin(), w.begin() + c), v(w.begin() + c, w.end());
      if (t.multiply(t.class_of_word(u), t.class_of_word(v)) !=
          t.class_of_word(w))
        return CheckResult::fail("congruence on words",
                                 "split product differs from whole word");
    }
    return CheckResult::ok("congruence on words", "500 random splits");
  });

  detail::timed(report, [&]() -> CheckResult {
    // Shortlex enumeration up to a budget: the first word reaching a class
    // must be its stored representative.
    std::size_t budget = 20000;
    std::vector<bool> seen(n, false);
    seen[t.identity()] = true;
    std::vector<Word> frontier{{}};
    std::size_t max_len = 0;
    for (const auto& e : t.elements) max_len = std::max(max_len, e.rep.size());
    for (std::size_t l = 0; l < max_len && frontier.size() <= budget; ++l) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (LetterIndex a = 0; a < s.alphabet.size(); ++a) {
          Word wa = w;
          wa.push_back(a);
          ElementIndex c = t.class_of_word(wa);
          if (!seen[c]) {
            seen[c] = true;
            if (t.elements[c].rep != wa)
              return CheckResult::fail(
                  "shortlex-minimal representatives",
                  "class " + t.class_name(c) + " reached first by '" +
                      word_to_string(s.alphabet, wa) + "'");
          }
          next.push_back(std::move(wa));
        }
      }
      frontier = std::move(next);
    }
    return CheckResult::ok("shortlex-minimal representatives");
  });

  detail::timed(report, [&]() -> CheckResult {
    if (n > kExhaustivePairs) {
      bool ok = detail::for_pairs(
          n, rng,
          [&](ElementIndex x, ElementIndex y) {
            ElementIndex sx = t.multiply(t.multiply(x, y), x);
            return !(t.phi(sx) == t.phi(x) && sx != x);
          },
          false);
      return ok ? CheckResult::ok("sandwich collapse",
                                  detail::scope_note(false, "pairs"))
                : CheckResult::fail("sandwich collapse", "sampled mismatch");
    }
    return verify_pullreg(t);
  });

  detail::timed(report, [&]() -> CheckResult {
    if (n > kHeightTransferBound)
      return CheckResult::skip("height transfer",
                               "expansion too large for the full check");
    return verify_height_transfer(t);
  });

  return report;
}

// ---------------------------------------------------------------------------
// Length/tree/representation suite
// ---------------------------------------------------------------------------

inline RunReport run_chiswell_suite(const FiniteSemigroup& s, Side side,
                                    const std::string& subject,
                                    std::uint64_t seed = kDefaultSeed) {
  RunReport report{std::string("length and tree (") + side_name(side) +
                       ") on " + subject,
                   {}};
  std::mt19937_64 rng(seed);
  KRSemigroup t = side == Side::left ? build_kr_left(s) : build_kr_right(s);
  std::size_t n = t.size();
  if (n > kContextBound) {
    report.checks.push_back(CheckResult::skip(
        "length and tree suite",
        "expansion has " + std::to_string(n) + " classes, above the bound"));
    return report;
  }
  LengthContext ctx = make_length_context(std::move(t));
  bool pair_exhaustive = n <= kExhaustivePairs;
  bool triple_exhaustive = n <= kExhaustiveTriples;

  detail::timed(report, [&]() -> CheckResult {
    return ctx.ell == 2 * ctx.T.base_greens.max_height()
               ? CheckResult::ok("ceiling is twice the maximal height")
               : CheckResult::fail("ceiling is twice the maximal height", "");
  });

  detail::timed(report, [&]() -> CheckResult {
    bool ok = detail::for_pairs(
        n, rng,
        [&](ElementIndex a, ElementIndex b) {
          return xi(ctx.T, a, b) == xi(ctx.T, b, a);
        },
        pair_exhaustive);
    return ok ? CheckResult::ok("shared prefix is symmetric",
                                detail::scope_note(pair_exhaustive, "pairs"))
              : CheckResult::fail("shared prefix is symmetric", "mismatch");
  });

  detail::timed(report, [&]() -> CheckResult {
    bool ok = detail::for_triples(
        n, rng,
        [&](ElementIndex a, ElementIndex b, ElementIndex c) {
          return xi(ctx.T, ctx.T.multiply(a, c), ctx.T.multiply(b, c)) >=
                 xi(ctx.T, a, b);
        },
        triple_exhaustive);
    return ok ? CheckResult::ok(
                    "shared prefix grows under right multiplication",
                    detail::scope_note(triple_exhaustive, "triples"))
              : CheckResult::fail(
                    "shared prefix grows under right multiplication", "");
  });

  detail::timed(report, [&]() -> CheckResult {
    bool ok = detail::for_triples(
        n, rng,
        [&](ElementIndex a, ElementIndex b, ElementIndex c) {
          return xi(ctx.T, a, c) >=
                 std::min(xi(ctx.T, a, b), xi(ctx.T, b, c));
        },
        triple_exhaustive);
    return ok ? CheckResult::ok("shared prefix two-out-of-three",
                                detail::scope_note(triple_exhaustive,
                                                   "triples"))
              : CheckResult::fail("shared prefix two-out-of-three", "");
  });

  detail::timed(report, [&]() -> CheckResult {
    bool ok = detail::for_triples(
        n, rng,
        [&](ElementIndex a, ElementIndex b, ElementIndex c) {
          if (a != b && xi(ctx.T, a, b) < xi(ctx.T, a, c))
            return ctx.D[a][b] < ctx.D[a][c];
          return true;
        },
        triple_exhaustive);
    return ok ? CheckResult::ok("smaller prefix means smaller length",
                                detail::scope_note(triple_exhaustive,
                                                   "triples"))
              : CheckResult::fail("smaller prefix means smaller length", "");
  });

  detail::timed(report, [&]() -> CheckResult {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        if (ctx.D[a][b] != ctx.D[b][a])
          return CheckResult::fail("length symmetry", "");
    return CheckResult::ok("length symmetry", "exhaustive over all pairs");
  });

  detail::timed(report, [&]() -> CheckResult {
    bool ok = detail::for_triples(
        n, rng,
        [&](ElementIndex a, ElementIndex b, ElementIndex c) {
          return ctx.D[ctx.T.multiply(a, c)][ctx.T.multiply(b, c)] >=
                 ctx.D[a][b];
        },
        triple_exhaustive);
    return ok ? CheckResult::ok("length grows under right multiplication",
                                detail::scope_note(triple_exhaustive,
                                                   "triples"))
              : CheckResult::fail("length grows under right multiplication",
                                  "");
  });

  detail::timed(report, [&]() -> CheckResult {
    bool ok = detail::for_triples(
        n, rng,
        [&](ElementIndex a, ElementIndex b, ElementIndex c) {
          return ctx.D[ctx.T.multiply(c, a)][ctx.T.multiply(c, b)] >=
                 ctx.D[a][b];
        },
        triple_exhaustive);
    return ok ? CheckResult::ok("length grows under left multiplication",
                                detail::scope_note(triple_exhaustive,
                                                   "triples"))
              : CheckResult::fail("length grows under left multiplication",
                                  "");
  });

  detail::timed(report, [&]() -> CheckResult {
    bool ok = detail::for_triples(
        n, rng,
        [&](ElementIndex a, ElementIndex b, ElementIndex c) {
          return ctx.D[a][c] >= std::min(ctx.D[a][b], ctx.D[b][c]);
        },
        triple_exhaustive);
    return ok ? CheckResult::ok("isoperimetric inequality",
                                detail::scope_note(triple_exhaustive,
                                                   "triples"))
              : CheckResult::fail("isoperimetric inequality", "");
  });

  detail::timed(report, [&]() -> CheckResult {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b) {
        if (ctx.D[a][b] > ctx.ell)
          return CheckResult::fail("length range", "value above the ceiling");
        if (ctx.D[a][b] == ctx.ell && a != b)
          return CheckResult::fail("length range",
                                   "distinct classes at the ceiling");
      }
    return CheckResult::ok("length range");
  });

  if (n > kTreeBound) {
    report.checks.push_back(CheckResult::skip(
        "tree and representations",
        "expansion has " + std::to_string(n) + " classes, above the bound"));
    return report;
  }

  ChiswellTree tree = build_tree(ctx);

  detail::timed(report, [&]() -> CheckResult {
    if (tree.members[0].size() != 1)
      return CheckResult::fail("rooted tree", "level 0 is not a single class");
    for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
      if (tree.is_root(v)) continue;
      std::size_t p = tree.parent(v);
      if (tree.depth(p) + 1 != tree.depth(v))
        return CheckResult::fail("rooted tree", "parent depth mismatch");
      std::size_t steps = 0, cur = v;
      while (!tree.is_root(cur)) {
        cur = tree.parent(cur);
        ++steps;
      }
      if (steps != tree.depth(v))
        return CheckResult::fail("rooted tree",
                                 "depth differs from distance to root");
    }
    return CheckResult::ok("rooted tree");
  });

  detail::timed(report, [&]() -> CheckResult {
    // Linking along a class never merges distinct parents: joined at k+1
    // means joined at k.
    for (std::size_t k = 0; k + 1 <= tree.ell; ++k)
      for (ElementIndex a = 0; a < n; ++a)
        for (ElementIndex b = 0; b < n; ++b)
          if (tree.class_of[k + 1][a] == tree.class_of[k + 1][b] &&
              tree.class_of[k][a] != tree.class_of[k][b])
            return CheckResult::fail("levels refine downward", "");
    return CheckResult::ok("levels refine downward");
  });

  for (Side action_side : {Side::left, Side::right}) {
    const char* label = action_side == Side::left
                            ? "left representation"
                            : "right representation";
    if (n <= kRepresentationFullBound) {
      detail::timed(report, [&]() -> CheckResult {
        Representation rep = representation(ctx, tree, action_side);
        for (const auto& c : rep.checks)
          if (!c.pass)
            return CheckResult::fail(label, c.name + ": " + c.detail);
        return CheckResult::ok(label, "all maps, exhaustive laws");
      });
    } else {
      detail::timed(report, [&]() -> CheckResult {
        // Sampled regime: identity plus random elements; ellipticity per
        // map, composition law on sampled pairs.
        std::uniform_int_distribution<ElementIndex> pick(
            0, static_cast<ElementIndex>(n - 1));
        auto act = [&](ElementIndex x) {
          return action_side == Side::left ? left_action(ctx, tree, x)
                                           : right_action(ctx, tree, x);
        };
        if (!(act(ctx.T.identity()) == identity_map(tree)))
          return CheckResult::fail(label, "identity does not act trivially");
        for (int i = 0; i < 200; ++i) {
          ElementIndex x = pick(rng), y = pick(rng);
          EllipticMap fx = act(x), fy = act(y);
          if (!is_elliptic(tree, fx).pass)
            return CheckResult::fail(label, "sampled map not elliptic");
          EllipticMap expect = action_side == Side::left
                                   ? em_compose(fx, fy)
                                   : em_compose(fy, fx);
          if (!(act(ctx.T.multiply(x, y)) == expect))
            return CheckResult::fail(label, "sampled composition law fails");
        }
        return CheckResult::ok(label, "sampled 200 pairs");
      });
    }
  }

  return report;
}

// ---------------------------------------------------------------------------
// Semaphore suite
// ---------------------------------------------------------------------------

inline RunReport run_semaphore_suite(const IdealSpec& spec,
                                     const std::string& subject) {
  RunReport report{"semaphore on " + subject, {}};
  SemaphoreCode code = code_from_ideal(spec);

  detail::timed(report, [&]() -> CheckResult {
    for (const std::string& x : code.words)
      for (const std::string& y : code.words)
        if (x != y && x.size() < y.size() &&
            y.compare(y.size() - x.size(), x.size(), x) == 0)
          return CheckResult::fail("suffix code",
                                   "'" + x + "' is a suffix of '" + y + "'");
    return CheckResult::ok("suffix code");
  });

  detail::timed(report, [&]() -> CheckResult {
    // Every window-length word has exactly one code suffix.
    std::vector<std::string> block{""};
    for (std::size_t i = 0; i < code.window; ++i) {
      std::vector<std::string> next;
      for (const std::string& w : block)
        for (const auto& tok : code.alphabet.tokens) next.push_back(w + tok);
      block = std::move(next);
    }
    for (const std::string& w : block) {
      std::size_t hits = 0;
      for (const std::string& c : code.words)
        if (c.size() <= w.size() &&
            w.compare(w.size() - c.size(), c.size(), c) == 0)
          ++hits;
      if (hits != 1)
        return CheckResult::fail("unique window suffix",
                                 "'" + w + "' has " + std::to_string(hits));
    }
    return CheckResult::ok("unique window suffix");
  });

  detail::timed(report, [&]() -> CheckResult {
    // The acting semigroup's generator maps reproduce the code action table.
    FiniteSemigroup s = acting_semigroup(code);
    for (LetterIndex a = 0; a < code.alphabet.size(); ++a) {
      Transformation expect;
      expect.images.resize(code.size());
      for (ElementIndex i = 0; i < code.size(); ++i)
        expect.images[i] = code.action[i][a];
      if (s.name(s.theta[a]) != transformation_name(expect))
        return CheckResult::fail("action table realized",
                                 "letter " + code.alphabet.tokens[a]);
    }
    return CheckResult::ok("action table realized");
  });

  detail::timed(report, [&]() -> CheckResult {
    PipelineResult result = example_pipeline(spec);
    if (result.tree.level_counts().size() != result.ctx.ell + 1)
      return CheckResult::fail("pipeline depth", "tree depth is not ell");
    for (const auto& m : result.letter_right_actions)
      if (!is_elliptic(result.tree, m).pass)
        return CheckResult::fail("pipeline depth",
                                 "letter overlay not elliptic");
    return CheckResult::ok("pipeline depth", "tree reaches ell; overlays ok");
  });

  return report;
}

// ---------------------------------------------------------------------------
// Aggregation and the randomized sweep
// ---------------------------------------------------------------------------

// Full battery on one semigroup. Both expansion sides are covered for small
// inputs; large inputs run the pipeline side only.
inline std::vector<RunReport> run_all_suites(const FiniteSemigroup& s,
                                             const std::string& subject,
                                             std::uint64_t seed = kDefaultSeed) {
  std::vector<RunReport> reports;
  reports.push_back(run_core_suite(s, subject));
  reports.push_back(run_kr_suite(s, Side::left, subject, seed));
  reports.push_back(run_chiswell_suite(s, Side::left, subject, seed));
  if (s.size() <= 30) {
    reports.push_back(run_kr_suite(s, Side::right, subject, seed));
    reports.push_back(run_chiswell_suite(s, Side::right, subject, seed));
  }
  return reports;
}

// Random transformation semigroup on up to `max_points` points.
inline FiniteSemigroup random_transformation_semigroup(std::mt19937_64& rng,
                                                       std::size_t max_points,
                                                       std::string* label) {
  std::uniform_int_distribution<std::size_t> points_dist(1, max_points);
  std::uniform_int_distribution<std::size_t> letters_dist(1, 3);
  std::size_t points = points_dist(rng);
  std::size_t letters = letters_dist(rng);
  static const std::vector<std::string> names{"a", "b", "c"};
  Alphabet alphabet = make_alphabet(
      std::vector<std::string>(names.begin(), names.begin() + letters));
  std::uniform_int_distribution<ElementIndex> image(
      0, static_cast<ElementIndex>(points - 1));
  std::vector<Transformation> gens;
  for (std::size_t g = 0; g < letters; ++g) {
    Transformation t;
    t.images.resize(points);
    for (auto& v : t.images) v = image(rng);
    gens.push_back(std::move(t));
  }
  if (label)
    *label = "points=" + std::to_string(points) +
             " letters=" + std::to_string(letters);
  return from_transformations(alphabet, gens);
}

inline std::vector<RunReport> run_random_sweep(std::size_t trials,
                                               std::size_t max_points,
                                               std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed);
  std::vector<RunReport> reports;
  for (std::size_t i = 0; i < trials; ++i) {
    std::string label;
    FiniteSemigroup s = random_transformation_semigroup(rng, max_points, &label);
    std::string subject = "random #" + std::to_string(i) + " (" + label +
                          ", " + std::to_string(s.size()) + " elements)";
    reports.push_back(run_core_suite(s, subject));
    reports.push_back(run_kr_suite(s, Side::left, subject, seed + i));
    reports.push_back(run_chiswell_suite(s, Side::left, subject, seed + i));
  }
  return reports;
}

inline void print_report(std::ostream& os, const RunReport& report) {
  os << "== " << report.subject << " ==\n";
  for (const auto& c : report.checks) {
    os << (c.skipped ? "[SKIP]" : c.pass ? "[PASS]" : "[FAIL]") << " "
       << c.name;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << "\n";
  }
}

inline bool all_pass(const std::vector<RunReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

}  // namespace holonomy
