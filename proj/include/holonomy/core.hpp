#pragma once

// Shared vocabulary types: alphabets, words, transformations, error taxonomy,
// and the check-report record used by all verification operations.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace holonomy {

using ElementIndex = std::uint32_t;
using LetterIndex = std::uint32_t;

// Word over an alphabet, stored as letter indices; empty word denotes the
// adjoined identity.
using Word = std::vector<LetterIndex>;

// ---------------------------------------------------------------------------
// Errors (CLI exit codes: input 1, invariant 2, resource 3)
// ---------------------------------------------------------------------------

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
  static constexpr int exit_code = 1;
};

// A violated internal invariant: signals a bug, never valid-input behavior.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
  static constexpr int exit_code = 2;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
  static constexpr int exit_code = 3;
};

// ---------------------------------------------------------------------------
// Alphabet
// ---------------------------------------------------------------------------

// Ordered finite set of letter tokens; the order is total and fixed and is
// used for all deterministic tie-breaking (shortlex enumeration, exports).
struct Alphabet {
  std::vector<std::string> tokens;

  std::size_t size() const { return tokens.size(); }
  const std::string& token(LetterIndex a) const { return tokens.at(a); }

  bool all_single_char() const {
    for (const auto& t : tokens)
      if (t.size() != 1) return false;
    return true;
  }
};

inline Alphabet make_alphabet(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw InputError("alphabet must be non-empty");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].empty()) throw InputError("alphabet token must be non-empty");
    for (std::size_t j = i + 1; j < tokens.size(); ++j)
      if (tokens[i] == tokens[j])
        throw InputError("duplicate alphabet token '" + tokens[i] + "'");
  }
  return Alphabet{tokens};
}

// Convenience: one letter per character of `chars`.
inline Alphabet make_alphabet(const std::string& chars) {
  std::vector<std::string> tokens;
  for (char c : chars) tokens.emplace_back(1, c);
  return make_alphabet(tokens);
}

// Parse a word: per-character when every token is a single character,
// whitespace-separated tokens otherwise.
inline Word parse_word(const Alphabet& alphabet, const std::string& text) {
  auto letter_of = [&](const std::string& tok) -> LetterIndex {
    for (LetterIndex a = 0; a < alphabet.size(); ++a)
      if (alphabet.tokens[a] == tok) return a;
    throw InputError("unknown letter '" + tok + "'");
  };
  Word w;
  if (alphabet.all_single_char()) {
    for (char c : text) {
      if (c == ' ') continue;
      w.push_back(letter_of(std::string(1, c)));
    }
  } else {
    std::string tok;
    for (char c : text + " ") {
      if (c == ' ') {
        if (!tok.empty()) w.push_back(letter_of(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
  }
  return w;
}

inline std::string word_to_string(const Alphabet& alphabet, const Word& w) {
  std::string out;
  bool spaced = !alphabet.all_single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (spaced && i) out += ' ';
    out += alphabet.token(w[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transformations of a finite point set {1..n} (stored 0-based)
// ---------------------------------------------------------------------------

struct Transformation {
  std::vector<ElementIndex> images;

  std::size_t degree() const { return images.size(); }
  ElementIndex apply(ElementIndex x) const { return images.at(x); }

  friend bool operator==(const Transformation&, const Transformation&) =
      default;
  friend auto operator<=>(const Transformation&, const Transformation&) =
      default;
};

inline Transformation make_transformation(
    const std::vector<ElementIndex>& images_1based) {
  Transformation t;
  for (ElementIndex v : images_1based) {
    if (v < 1 || v > images_1based.size())
      throw InputError("transformation image out of range");
    t.images.push_back(v - 1);
  }
  if (t.images.empty()) throw InputError("transformation must be non-empty");
  return t;
}

// Product st = "s acts first, then t".
inline Transformation compose(const Transformation& s,
                              const Transformation& t) {
  if (s.degree() != t.degree())
    throw InputError("transformations act on different point sets");
  Transformation r;
  r.images.resize(s.degree());
  for (std::size_t x = 0; x < s.degree(); ++x)
    r.images[x] = t.images[s.images[x]];
  return r;
}

// Display as the 1-based image row "(i1 i2 ... in)".
inline std::string transformation_name(const Transformation& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(t.images[i] + 1);
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

// One verification outcome; `skipped` marks checks whose precondition is not
// met (reported with a notice, counted neither pass nor fail).
struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double millis = 0.0;  // wall-clock cost when run through a suite

  static CheckResult ok(std::string name, std::string detail = "") {
    return {std::move(name), true, false, std::move(detail), 0.0};
  }
  static CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, false, std::move(detail), 0.0};
  }
  static CheckResult skip(std::string name, std::string detail) {
    return {std::move(name), false, true, std::move(detail), 0.0};
  }
};

}  // namespace holonomy
