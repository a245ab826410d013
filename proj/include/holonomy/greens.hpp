#pragma once

// Green's quasi-orders on a monoid with adjoined identity, J-classes with
// their condensation order, Dedekind heights, regularity, and stability.

#include <optional>
#include <string>
#include <vector>

#include "holonomy/core.hpp"
#include "holonomy/semigroup.hpp"

namespace holonomy {

struct GreensStructure {
  // leq_r[a][b] means a <=_R b, i.e. a ∈ b·S¹; likewise for L and J.
  std::vector<std::vector<bool>> leq_r, leq_l, leq_j;
  std::vector<ElementIndex> j_class_of;          // element -> class id
  std::vector<std::vector<ElementIndex>> j_classes;  // class -> members (asc)
  std::vector<std::vector<bool>> j_class_leq;    // condensation order
  std::vector<std::size_t> heights;              // element -> h

  bool strictly_below_j(ElementIndex a, ElementIndex b) const {
    return leq_j[a][b] && !leq_j[b][a];
  }
  bool j_equivalent(ElementIndex a, ElementIndex b) const {
    return j_class_of[a] == j_class_of[b];
  }
  std::size_t max_height() const {
    std::size_t m = 0;
    for (std::size_t h : heights) m = std::max(m, h);
    return m;
  }
};

namespace detail {

// {x : x reachable from b} under the given one-step successor sets equals
// the principal ideal of b for the matching order.
template <typename Steps>
inline std::vector<bool> downset(std::size_t n, ElementIndex b, Steps steps) {
  std::vector<bool> seen(n, false);
  std::vector<ElementIndex> stack{b};
  seen[b] = true;
  while (!stack.empty()) {
    ElementIndex v = stack.back();
    stack.pop_back();
    for (ElementIndex w : steps(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace detail

// Quasi-orders via reachability in the right/left/union Cayley graphs,
// J-classes as mutual-reachability classes (numbered by least member),
// heights as longest descending chains from the class of the identity.
inline GreensStructure greens(const FiniteSemigroup& m) {
  if (!m.has_adjoined_identity)
    throw InputError("greens requires a semigroup with adjoined identity");
  std::size_t n = m.size();
  GreensStructure g;
  g.leq_r.assign(n, std::vector<bool>(n, false));
  g.leq_l.assign(n, std::vector<bool>(n, false));
  g.leq_j.assign(n, std::vector<bool>(n, false));

  std::vector<ElementIndex> right, left, both;
  auto right_steps = [&](ElementIndex v) -> const std::vector<ElementIndex>& {
    right.clear();
    for (ElementIndex gidx : m.theta) right.push_back(m.mul(v, gidx));
    return right;
  };
  auto left_steps = [&](ElementIndex v) -> const std::vector<ElementIndex>& {
    left.clear();
    for (ElementIndex gidx : m.theta) left.push_back(m.mul(gidx, v));
    return left;
  };
  auto union_steps = [&](ElementIndex v) -> const std::vector<ElementIndex>& {
    both.clear();
    for (ElementIndex gidx : m.theta) {
      both.push_back(m.mul(v, gidx));
      both.push_back(m.mul(gidx, v));
    }
    return both;
  };

  for (ElementIndex b = 0; b < n; ++b) {
    auto r = detail::downset(n, b, right_steps);
    auto l = detail::downset(n, b, left_steps);
    auto j = detail::downset(n, b, union_steps);
    for (ElementIndex a = 0; a < n; ++a) {
      g.leq_r[a][b] = r[a];
      g.leq_l[a][b] = l[a];
      g.leq_j[a][b] = j[a];
    }
  }

  g.j_class_of.assign(n, 0);
  std::vector<bool> classed(n, false);
  for (ElementIndex a = 0; a < n; ++a) {
    if (classed[a]) continue;
    ElementIndex id = static_cast<ElementIndex>(g.j_classes.size());
    std::vector<ElementIndex> members;
    for (ElementIndex b = a; b < n; ++b) {
      if (!classed[b] && g.leq_j[a][b] && g.leq_j[b][a]) {
        classed[b] = true;
        g.j_class_of[b] = id;
        members.push_back(b);
      }
    }
    g.j_classes.push_back(std::move(members));
  }

  std::size_t nc = g.j_classes.size();
  g.j_class_leq.assign(nc, std::vector<bool>(nc, false));
  for (ElementIndex c = 0; c < nc; ++c)
    for (ElementIndex d = 0; d < nc; ++d)
      g.j_class_leq[c][d] = g.leq_j[g.j_classes[c][0]][g.j_classes[d][0]];

  // h(class) = longest strict chain down from the class of the identity,
  // which is the unique maximum of the condensation order.
  std::vector<std::optional<std::size_t>> memo(nc);
  auto rec = [&](auto&& self, ElementIndex c) -> std::size_t {
    if (memo[c]) return *memo[c];
    std::size_t best = 0;
    for (ElementIndex d = 0; d < nc; ++d)
      if (c != d && g.j_class_leq[c][d] && !g.j_class_leq[d][c])
        best = std::max(best, self(self, d) + 1);
    memo[c] = best;
    return best;
  };
  g.heights.assign(n, 0);
  for (ElementIndex a = 0; a < n; ++a) g.heights[a] = rec(rec, g.j_class_of[a]);
  return g;
}

// ---------------------------------------------------------------------------
// Regularity
// ---------------------------------------------------------------------------

struct RegularityReport {
  bool regular = false;
  // When regular: a witness s' per element with s s' s = s.
  std::vector<ElementIndex> witness;
  // When not: some element without a witness.
  std::optional<ElementIndex> counterexample;
};

inline RegularityReport is_regular(const FiniteSemigroup& s) {
  std::size_t n = s.size();
  RegularityReport rep;
  rep.witness.assign(n, 0);
  for (ElementIndex x = 0; x < n; ++x) {
    bool found = false;
    for (ElementIndex y = 0; y < n && !found; ++y) {
      if (s.mul(s.mul(x, y), x) == x) {
        rep.witness[x] = y;
        found = true;
      }
    }
    if (!found) {
      rep.counterexample = x;
      rep.witness.clear();
      return rep;
    }
  }
  rep.regular = true;
  return rep;
}

// ---------------------------------------------------------------------------
// Stability
// ---------------------------------------------------------------------------

// <=_R ∩ J = R and <=_L ∩ J = L, pointwise; finite semigroups always pass,
// so a failure signals an implementation bug.
inline CheckResult check_stability(const FiniteSemigroup& m,
                                   const GreensStructure& g) {
  std::size_t n = m.size();
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      if (g.leq_r[a][b] && g.j_equivalent(a, b) && !g.leq_r[b][a])
        return CheckResult::fail(
            "stability",
            "a <=_R b and a J b but not b <=_R a for a=" + m.name(a) +
                ", b=" + m.name(b));
      if (g.leq_l[a][b] && g.j_equivalent(a, b) && !g.leq_l[b][a])
        return CheckResult::fail(
            "stability",
            "a <=_L b and a J b but not b <=_L a for a=" + m.name(a) +
                ", b=" + m.name(b));
    }
  }
  return CheckResult::ok("stability");
}

}  // namespace holonomy
