#pragma once

// The three built-in fixtures: the two-element left-zero semigroup, the full
// transformation monoid on two points, and the window-4 suffix semaphore
// code with its acting semigroup.

#include <string>

#include "holonomy/core.hpp"
#include "holonomy/semaphore.hpp"
#include "holonomy/semigroup.hpp"

namespace holonomy {

inline FiniteSemigroup make_lz2() {
  return from_table(make_alphabet("ab"), {"a", "b"}, {{0, 0}, {1, 1}}, {0, 1});
}

inline FiniteSemigroup make_t2() {
  return from_transformations(
      make_alphabet("ab"),
      {make_transformation({2, 1}), make_transformation({1, 1})});
}

inline IdealSpec sem41_spec() {
  return IdealSpec{make_alphabet("ab"), 4, {"aaa", "aab", "aba", "baa", "bab"}};
}

inline FiniteSemigroup make_sem41() {
  return acting_semigroup(code_from_ideal(sem41_spec()));
}

inline FiniteSemigroup fixture_semigroup(const std::string& name) {
  if (name == "lz2") return make_lz2();
  if (name == "t2") return make_t2();
  if (name == "sem41") return make_sem41();
  throw InputError("unknown fixture '" + name +
                   "' (expected lz2, t2, or sem41)");
}

}  // namespace holonomy
