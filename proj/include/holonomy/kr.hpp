#pragma once

// The expansion of a finite semigroup by transition-edge history: classes of
// words keyed by (image, transition-edge sequence), built as a deterministic
// automaton with shortlex representatives, plus its verification operations.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holonomy/cayley.hpp"
#include "holonomy/core.hpp"
#include "holonomy/greens.hpp"
#include "holonomy/semigroup.hpp"

namespace holonomy {

struct KRElement {
  ElementIndex image = 0;          // endpoint in the base monoid
  std::vector<Edge> transitions;   // transition edges of the word's path
  Word rep;                        // shortlex-least representative
};

// T^1: the expansion together with its adjoined identity, which is the class
// of the empty word (index 0) and is distinct from every nonempty-word class
// because edges at the base identity are always transitions.
struct KRSemigroup {
  Side side = Side::right;
  FiniteSemigroup base;        // S¹ (the opposite monoid for the left side)
  CayleyGraph graph;           // right Cayley graph of base
  GreensStructure base_greens;
  std::vector<KRElement> elements;              // [0] = identity class
  std::vector<std::vector<ElementIndex>> step;  // class x letter -> class

  std::size_t size() const { return elements.size(); }
  ElementIndex identity() const { return 0; }
  ElementIndex phi(ElementIndex x) const { return elements[x].image; }

  // Class of rep(x)·rep(y): walk the right factor's representative through
  // the class automaton. Well-definedness rests on the class key of wa
  // depending only on (class key of w, a).
  ElementIndex multiply(ElementIndex x, ElementIndex y) const {
    ElementIndex cur = x;
    for (LetterIndex a : elements[y].rep) cur = step[cur][a];
    return cur;
  }

  ElementIndex class_of_word(const Word& w) const {
    ElementIndex cur = 0;
    for (LetterIndex a : w) {
      if (a >= base.alphabet.size()) throw InputError("unknown letter in word");
      cur = step[cur][a];
    }
    return cur;
  }

  // Display name of a class: its representative word, "1" for the identity.
  std::string class_name(ElementIndex x) const {
    if (x == 0) return identity_name();
    return word_to_string(base.alphabet, elements[x].rep);
  }

  std::string identity_name() const {
    std::string one = "1";
    auto taken = [&](const std::string& s) {
      for (ElementIndex i = 1; i < size(); ++i)
        if (word_to_string(base.alphabet, elements[i].rep) == s) return true;
      return false;
    };
    while (taken(one)) one += '\'';
    return one;
  }
};

namespace detail {

inline std::size_t count_r_classes(const GreensStructure& g) {
  std::size_t n = g.leq_r.size();
  std::size_t count = 0;
  std::vector<bool> seen(n, false);
  for (ElementIndex a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++count;
    for (ElementIndex b = a; b < n; ++b)
      if (g.leq_r[a][b] && g.leq_r[b][a]) seen[b] = true;
  }
  return count;
}

}  // namespace detail

// BFS over class keys, words in shortlex order, so the first word reaching a
// key is the class's shortlex-least representative.
inline KRSemigroup build_kr_right(const FiniteSemigroup& s,
                                  std::size_t cap = kDefaultClosureCap) {
  if (s.has_adjoined_identity)
    throw InputError(
        "the expansion expects the semigroup without an adjoined identity");
  KRSemigroup t;
  t.side = Side::right;
  t.base = adjoin_identity(s);
  t.graph = build_cayley(t.base, Side::right);
  t.base_greens = greens(t.base);
  const std::size_t r_classes = detail::count_r_classes(t.base_greens);

  using Key = std::pair<ElementIndex, std::vector<Edge>>;
  std::map<Key, ElementIndex> index;
  t.elements.push_back({*t.base.identity_index, {}, {}});
  index[{*t.base.identity_index, {}}] = 0;

  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    t.step.emplace_back(t.base.alphabet.size());
    for (LetterIndex a = 0; a < t.base.alphabet.size(); ++a) {
      const KRElement& cur = t.elements[i];
      Key key{t.graph.step[cur.image][a], cur.transitions};
      if (t.graph.transition[cur.image][a])
        key.second.push_back(t.graph.edge(cur.image, a));
      auto it = index.find(key);
      if (it == index.end()) {
        if (t.elements.size() >= cap)
          throw ResourceError("expansion exceeds cap of " +
                              std::to_string(cap) + " classes");
        // Safety bounds: any nonempty word has at least one transition, and
        // transition endpoints strictly R-decrease, bounding the history.
        if (key.second.empty())
          throw InvariantError("nonempty word with empty transition history");
        if (key.second.size() > r_classes)
          throw InvariantError("transition history exceeds the R-class bound");
        for (std::size_t k = 1; k < key.second.size(); ++k) {
          ElementIndex hi = key.second[k - 1].target;
          ElementIndex lo = key.second[k].target;
          if (!(t.base_greens.leq_r[lo][hi] && !t.base_greens.leq_r[hi][lo]))
            throw InvariantError(
                "transition endpoints do not strictly R-decrease");
        }
        KRElement fresh;
        fresh.image = key.first;
        fresh.transitions = key.second;
        fresh.rep = cur.rep;
        fresh.rep.push_back(a);
        it = index.emplace(std::move(key),
                           static_cast<ElementIndex>(t.elements.size()))
                 .first;
        t.elements.push_back(std::move(fresh));
      }
      t.step[i][a] = it->second;
    }
  }

  // phi must cover the whole base monoid (it is onto by construction of the
  // base as a quotient of the word classes).
  std::vector<bool> hit(t.base.size(), false);
  for (const KRElement& e : t.elements) hit[e.image] = true;
  for (ElementIndex x = 0; x < t.base.size(); ++x)
    if (!hit[x])
      throw InvariantError("phi misses base element '" + t.base.name(x) + "'");
  return t;
}

// The left expansion is the right expansion of the opposite semigroup; all
// downstream machinery operates on the opposite base uniformly.
inline KRSemigroup build_kr_left(const FiniteSemigroup& s,
                                 std::size_t cap = kDefaultClosureCap) {
  KRSemigroup t = build_kr_right(opposite(s), cap);
  t.side = Side::left;
  return t;
}

// Materialize T^1 as a plain finite semigroup (identity class flagged as the
// adjoined identity; names are representative words).
inline FiniteSemigroup as_semigroup(const KRSemigroup& t) {
  FiniteSemigroup m;
  m.alphabet = t.base.alphabet;
  std::size_t n = t.size();
  m.names.push_back(t.identity_name());
  for (ElementIndex i = 1; i < n; ++i)
    m.names.push_back(word_to_string(m.alphabet, t.elements[i].rep));
  m.table.resize(n * n);
  for (ElementIndex x = 0; x < n; ++x)
    for (ElementIndex y = 0; y < n; ++y)
      m.table[static_cast<std::size_t>(x) * n + y] = t.multiply(x, y);
  for (LetterIndex a = 0; a < m.alphabet.size(); ++a)
    m.theta.push_back(t.step[0][a]);
  m.has_adjoined_identity = true;
  m.identity_index = 0;
  return m;
}

// ---------------------------------------------------------------------------
// Verification operations
// ---------------------------------------------------------------------------

// If a sandwich t t' t has the same image as t, it already equals t.
inline CheckResult verify_pullreg(const KRSemigroup& t) {
  for (ElementIndex x = 0; x < t.size(); ++x) {
    for (ElementIndex y = 0; y < t.size(); ++y) {
      ElementIndex s = t.multiply(t.multiply(x, y), x);
      if (t.phi(s) == t.phi(x) && s != x)
        return CheckResult::fail(
            "sandwich collapse",
            "phi(t t' t) = phi(t) but t t' t != t for t=" + t.class_name(x) +
                ", t'=" + t.class_name(y));
    }
  }
  return CheckResult::ok("sandwich collapse");
}

// For a regular base: heights transfer along phi, and the strict J-order of
// classes mirrors the strict J-order of their images in both directions
// (non-strict comparisons pull back as well). Skipped with a notice when the
// base is not regular.
inline CheckResult verify_height_transfer(const KRSemigroup& t) {
  auto reg = is_regular(t.base);
  if (!reg.regular)
    return CheckResult::skip(
        "height transfer",
        "base is not regular (counterexample " +
            t.base.name(*reg.counterexample) + "); nothing checked");
  FiniteSemigroup tm = as_semigroup(t);
  GreensStructure tg = greens(tm);
  for (ElementIndex x = 0; x < t.size(); ++x)
    if (tg.heights[x] != t.base_greens.heights[t.phi(x)])
      return CheckResult::fail(
          "height transfer",
          "h(" + t.class_name(x) + ") = " + std::to_string(tg.heights[x]) +
              " but h(phi) = " +
              std::to_string(t.base_greens.heights[t.phi(x)]));
  for (ElementIndex x = 0; x < t.size(); ++x) {
    for (ElementIndex y = 0; y < t.size(); ++y) {
      ElementIndex px = t.phi(x), py = t.phi(y);
      bool strict_t = tg.leq_j[x][y] && !tg.leq_j[y][x];
      bool strict_s = t.base_greens.leq_j[px][py] && !t.base_greens.leq_j[py][px];
      if (strict_t != strict_s)
        return CheckResult::fail(
            "height transfer",
            "strict J-order disagrees with phi images for t=" +
                t.class_name(x) + ", t'=" + t.class_name(y));
      if (t.base_greens.leq_j[px][py] && !tg.leq_j[x][y])
        return CheckResult::fail(
            "height transfer",
            "phi(t) <=_J phi(t') does not pull back for t=" + t.class_name(x) +
                ", t'=" + t.class_name(y));
    }
  }
  return CheckResult::ok("height transfer");
}

}  // namespace holonomy
