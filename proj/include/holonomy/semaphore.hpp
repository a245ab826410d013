#pragma once

// Suffix semaphore codes built from ideal generators, their right action,
// the acting transformation semigroup, and the full example pipeline.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "holonomy/chiswell.hpp"
#include "holonomy/core.hpp"
#include "holonomy/kr.hpp"
#include "holonomy/semigroup.hpp"

namespace holonomy {

struct IdealSpec {
  Alphabet alphabet;      // single-character tokens
  std::size_t window = 0;
  std::vector<std::string> generators;
};

struct SemaphoreCode {
  Alphabet alphabet;
  std::size_t window = 0;
  std::vector<std::string> words;  // shortlex sorted
  // action[i][a]: index of words[i] extended by letter a.
  std::vector<std::vector<ElementIndex>> action;

  std::size_t size() const { return words.size(); }

  ElementIndex index_of(const std::string& word) const {
    for (ElementIndex i = 0; i < words.size(); ++i)
      if (words[i] == word) return i;
    throw InputError("'" + word + "' is not a code word");
  }
};

namespace detail {

inline bool is_suffix(const std::string& s, const std::string& w) {
  return s.size() <= w.size() &&
         w.compare(w.size() - s.size(), s.size(), s) == 0;
}

inline bool is_proper_suffix(const std::string& s, const std::string& w) {
  return s.size() < w.size() && is_suffix(s, w);
}

inline bool shortlex_less(const std::string& x, const std::string& y) {
  return x.size() != y.size() ? x.size() < y.size() : x < y;
}

}  // namespace detail

// Code = suffix-minimal generators plus all window-length words with no
// generator suffix. The construction validates that the result is a suffix
// code with a total, unique right action and fails loudly otherwise.
inline SemaphoreCode code_from_ideal(const IdealSpec& spec) {
  if (!spec.alphabet.all_single_char())
    throw InputError("semaphore codes require single-character letters");
  if (spec.window == 0) throw InputError("window must be positive");
  if (spec.generators.empty())
    throw InputError("ideal needs at least one generator");
  for (const std::string& g : spec.generators) {
    if (g.empty() || g.size() > spec.window)
      throw InputError("ideal generator '" + g +
                       "' must have length between 1 and the window");
    for (char c : g) {
      bool known = false;
      for (const auto& tok : spec.alphabet.tokens) known |= tok[0] == c;
      if (!known)
        throw InputError("ideal generator '" + g + "' uses an unknown letter");
    }
  }

  SemaphoreCode code;
  code.alphabet = spec.alphabet;
  code.window = spec.window;
  std::set<std::string> words;
  for (const std::string& w : spec.generators) {
    bool minimal = true;
    for (const std::string& v : spec.generators)
      if (detail::is_proper_suffix(v, w)) minimal = false;
    if (minimal) words.insert(w);
  }
  std::vector<std::string> block{""};
  for (std::size_t i = 0; i < spec.window; ++i) {
    std::vector<std::string> next;
    for (const std::string& w : block)
      for (const auto& tok : spec.alphabet.tokens) next.push_back(w + tok);
    block = std::move(next);
  }
  for (const std::string& w : block) {
    bool clean = true;
    for (const std::string& v : spec.generators)
      if (detail::is_suffix(v, w)) clean = false;
    if (clean) words.insert(w);
  }
  code.words.assign(words.begin(), words.end());
  std::sort(code.words.begin(), code.words.end(), detail::shortlex_less);

  for (const std::string& x : code.words)
    for (const std::string& y : code.words)
      if (x != y && detail::is_suffix(x, y))
        throw InputError("construction failed: '" + x +
                         "' is a suffix of code word '" + y + "'");

  // Maximality as the action relies on it: every window-length word must
  // have exactly one code suffix.
  for (const std::string& w : block) {
    std::size_t hits = 0;
    for (const std::string& c : code.words)
      if (detail::is_suffix(c, w)) ++hits;
    if (hits != 1)
      throw InputError("construction failed: '" + w + "' has " +
                       std::to_string(hits) + " code suffixes");
  }

  code.action.assign(code.size(),
                     std::vector<ElementIndex>(spec.alphabet.size(), 0));
  for (ElementIndex i = 0; i < code.size(); ++i) {
    for (LetterIndex a = 0; a < spec.alphabet.size(); ++a) {
      std::string ua = code.words[i] + spec.alphabet.tokens[a];
      std::vector<ElementIndex> hits;
      for (ElementIndex j = 0; j < code.size(); ++j)
        if (detail::is_suffix(code.words[j], ua)) hits.push_back(j);
      if (hits.size() != 1)
        throw InputError("construction failed: '" + ua + "' has " +
                         std::to_string(hits.size()) + " code suffixes");
      code.action[i][a] = hits[0];
    }
  }
  return code;
}

// The unique code suffix of u extended by a letter.
inline const std::string& right_action(const SemaphoreCode& code,
                                       const std::string& u,
                                       const std::string& letter) {
  ElementIndex i = code.index_of(u);
  for (LetterIndex a = 0; a < code.alphabet.size(); ++a)
    if (code.alphabet.tokens[a] == letter) return code.words[code.action[i][a]];
  throw InputError("unknown letter '" + letter + "'");
}

// Transformation semigroup on the code's word set generated by the letter
// actions (closure under composition).
inline FiniteSemigroup acting_semigroup(const SemaphoreCode& code,
                                        std::size_t cap = kDefaultClosureCap) {
  std::vector<Transformation> gens;
  for (LetterIndex a = 0; a < code.alphabet.size(); ++a) {
    Transformation t;
    t.images.resize(code.size());
    for (ElementIndex i = 0; i < code.size(); ++i) t.images[i] = code.action[i][a];
    gens.push_back(std::move(t));
  }
  return from_transformations(code.alphabet, gens, cap);
}

// The full chain: code, acting semigroup, left expansion with its length
// context and tree, and the per-letter right-action overlays.
struct PipelineResult {
  SemaphoreCode code;
  FiniteSemigroup S;
  LengthContext ctx;
  ChiswellTree tree;
  std::vector<EllipticMap> letter_right_actions;  // per letter
};

inline PipelineResult example_pipeline(const IdealSpec& spec,
                                       std::size_t cap = kDefaultClosureCap) {
  PipelineResult out;
  out.code = code_from_ideal(spec);
  out.S = acting_semigroup(out.code, cap);
  out.ctx = make_length_context(build_kr_left(out.S, cap));
  out.tree = build_tree(out.ctx);
  for (LetterIndex a = 0; a < spec.alphabet.size(); ++a)
    out.letter_right_actions.push_back(
        right_action(out.ctx, out.tree, out.ctx.T.step[0][a]));
  return out;
}

}  // namespace holonomy
