#pragma once

// Finite semigroups with chosen generators: construction from transformation
// generators or an explicit table, identity adjunction, opposites, and word
// evaluation.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/core.hpp"

namespace holonomy {

inline constexpr std::size_t kDefaultClosureCap = 100000;
// Above this size the O(n^3) associativity sweep is skipped unless forced.
inline constexpr std::size_t kAssociativityBound = 512;

struct FiniteSemigroup {
  Alphabet alphabet;
  std::vector<std::string> names;       // element index -> display string
  std::vector<ElementIndex> table;      // n*n row-major products
  std::vector<ElementIndex> theta;      // letter -> element index
  bool has_adjoined_identity = false;
  std::optional<ElementIndex> identity_index;

  std::size_t size() const { return names.size(); }

  ElementIndex mul(ElementIndex x, ElementIndex y) const {
    return table[static_cast<std::size_t>(x) * size() + y];
  }

  const std::string& name(ElementIndex x) const { return names.at(x); }

  std::optional<ElementIndex> index_of(const std::string& element_name) const {
    for (ElementIndex i = 0; i < size(); ++i)
      if (names[i] == element_name) return i;
    return std::nullopt;
  }
};

namespace detail {

inline void check_associativity(const FiniteSemigroup& s) {
  std::size_t n = s.size();
  for (ElementIndex x = 0; x < n; ++x)
    for (ElementIndex y = 0; y < n; ++y)
      for (ElementIndex z = 0; z < n; ++z)
        if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z)))
          throw InputError("table is not associative at (" + s.name(x) + ", " +
                           s.name(y) + ", " + s.name(z) + ")");
}

// Every element must be reachable from the generators by right extension
// (words evaluate left to right, so right closure covers all products).
inline void check_generation(const FiniteSemigroup& s) {
  std::size_t n = s.size();
  std::vector<char> seen(n, 0);
  std::vector<ElementIndex> queue;
  for (ElementIndex g : s.theta) {
    if (!seen[g]) {
      seen[g] = 1;
      queue.push_back(g);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElementIndex g : s.theta) {
      ElementIndex p = s.mul(queue[i], g);
      if (!seen[p]) {
        seen[p] = 1;
        queue.push_back(p);
      }
    }
  }
  for (ElementIndex x = 0; x < n; ++x)
    if (!seen[x])
      throw InputError("generators do not generate element '" + s.name(x) +
                       "'");
}

}  // namespace detail

// Closure of generator transformations under composition, one generator per
// letter in alphabet order. Elements are indexed by BFS discovery order over
// shortlex words, which makes the numbering reproducible.
inline FiniteSemigroup from_transformations(
    const Alphabet& alphabet, const std::vector<Transformation>& gens,
    std::size_t cap = kDefaultClosureCap) {
  if (gens.size() != alphabet.size())
    throw InputError("need exactly one generator per letter");
  for (const Transformation& g : gens)
    if (g.degree() != gens.front().degree())
      throw InputError("transformations act on different point sets");

  std::vector<Transformation> elems;
  std::map<Transformation, ElementIndex> index;
  FiniteSemigroup s;
  s.alphabet = alphabet;
  for (const Transformation& g : gens) {
    auto it = index.find(g);
    if (it == index.end()) {
      it = index.emplace(g, static_cast<ElementIndex>(elems.size())).first;
      elems.push_back(g);
    }
    s.theta.push_back(it->second);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Transformation& g : gens) {
      Transformation p = compose(elems[i], g);
      if (!index.count(p)) {
        if (elems.size() >= cap)
          throw ResourceError("transformation closure exceeds cap of " +
                              std::to_string(cap) + " elements");
        index.emplace(p, static_cast<ElementIndex>(elems.size()));
        elems.push_back(p);
      }
    }
  }

  std::size_t n = elems.size();
  s.table.resize(n * n);
  for (ElementIndex x = 0; x < n; ++x)
    for (ElementIndex y = 0; y < n; ++y)
      s.table[static_cast<std::size_t>(x) * n + y] =
          index.at(compose(elems[x], elems[y]));
  for (const Transformation& e : elems) s.names.push_back(transformation_name(e));
  return s;
}

struct TableOptions {
  bool force_associativity_check = false;
};

// Build from an explicit table; validates associativity (bounded) and that
// the chosen generators reach every element.
inline FiniteSemigroup from_table(const Alphabet& alphabet,
                                  const std::vector<std::string>& names,
                                  const std::vector<std::vector<ElementIndex>>& table,
                                  const std::vector<ElementIndex>& theta,
                                  TableOptions opts = {}) {
  std::size_t n = names.size();
  if (n == 0) throw InputError("semigroup must be non-empty");
  if (table.size() != n) throw InputError("table must be square");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("table must be square");
    for (ElementIndex v : row)
      if (v >= n) throw InputError("table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names[i] == names[j])
        throw InputError("duplicate element name '" + names[i] + "'");
  if (theta.size() != alphabet.size())
    throw InputError("theta must map every letter");
  for (ElementIndex g : theta)
    if (g >= n) throw InputError("theta image out of range");

  FiniteSemigroup s;
  s.alphabet = alphabet;
  s.names = names;
  s.theta = theta;
  s.table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) s.table[x * n + y] = table[x][y];

  if (n <= kAssociativityBound || opts.force_associativity_check)
    detail::check_associativity(s);
  detail::check_generation(s);
  return s;
}

// Adjoin a fresh two-sided identity (even if the semigroup is already a
// monoid); the new element gets the first unused name among 1, 1', 1'', ...
inline FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  std::size_t n = s.size();
  std::size_t m = n + 1;
  FiniteSemigroup r;
  r.alphabet = s.alphabet;
  r.names = s.names;
  std::string one = "1";
  while (std::find(r.names.begin(), r.names.end(), one) != r.names.end())
    one += '\'';
  r.names.push_back(one);
  r.theta = s.theta;
  r.table.resize(m * m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r.table[x * m + y] = s.mul(x, y);
  for (ElementIndex x = 0; x < m; ++x) {
    r.table[static_cast<std::size_t>(x) * m + n] = x;
    r.table[static_cast<std::size_t>(n) * m + x] = x;
  }
  r.has_adjoined_identity = true;
  r.identity_index = static_cast<ElementIndex>(n);
  return r;
}

// Same element set, reversed product x∘y = y·x; involutive.
inline FiniteSemigroup opposite(const FiniteSemigroup& s) {
  FiniteSemigroup r = s;
  std::size_t n = s.size();
  for (ElementIndex x = 0; x < n; ++x)
    for (ElementIndex y = 0; y < n; ++y)
      r.table[static_cast<std::size_t>(x) * n + y] = s.mul(y, x);
  return r;
}

// Left-to-right product of the letter images; the empty word needs the
// adjoined identity.
inline ElementIndex evaluate_word(const FiniteSemigroup& s, const Word& w) {
  if (w.empty()) {
    if (!s.identity_index)
      throw InputError("empty word requires an adjoined identity");
    return *s.identity_index;
  }
  auto image = [&](LetterIndex a) -> ElementIndex {
    if (a >= s.alphabet.size()) throw InputError("unknown letter in word");
    return s.theta[a];
  };
  ElementIndex cur = image(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) cur = s.mul(cur, image(w[i]));
  return cur;
}

}  // namespace holonomy
