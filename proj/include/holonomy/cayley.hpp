#pragma once

// Deterministic left/right Cayley graphs over a monoid with adjoined
// identity: SCC condensation, transition-edge flags, and word paths.

#include <string>
#include <vector>

#include "holonomy/core.hpp"
#include "holonomy/semigroup.hpp"

namespace holonomy {

enum class Side { left, right };

inline const char* side_name(Side s) {
  return s == Side::left ? "left" : "right";
}

// Edge identity is the full triple: two edges with equal endpoints but
// different letters are distinct.
struct Edge {
  ElementIndex source = 0;
  LetterIndex letter = 0;
  ElementIndex target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct CayleyGraph {
  Side side = Side::right;
  FiniteSemigroup monoid;  // the underlying S¹
  // step[v][a]: target of the unique a-edge at v (completeness/determinism).
  std::vector<std::vector<ElementIndex>> step;
  std::vector<ElementIndex> scc;  // vertex -> component id
  // transition[v][a]: the a-edge at v leaves its component for good.
  std::vector<std::vector<bool>> transition;

  std::size_t vertex_count() const { return step.size(); }

  Edge edge(ElementIndex v, LetterIndex a) const {
    return Edge{v, a, step[v][a]};
  }
  bool is_transition(ElementIndex v, LetterIndex a) const {
    return transition[v][a];
  }

  // All edges in (source, letter) order — the canonical export order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (ElementIndex v = 0; v < vertex_count(); ++v)
      for (LetterIndex a = 0; a < step[v].size(); ++a)
        out.push_back(edge(v, a));
    return out;
  }

  std::vector<Edge> transition_edges() const {
    std::vector<Edge> out;
    for (ElementIndex v = 0; v < vertex_count(); ++v)
      for (LetterIndex a = 0; a < step[v].size(); ++a)
        if (transition[v][a]) out.push_back(edge(v, a));
    return out;
  }
};

namespace detail {

// Iterative Tarjan; component ids are renumbered by smallest member so the
// numbering is order-stable.
inline std::vector<ElementIndex> strongly_connected_components(
    const std::vector<std::vector<ElementIndex>>& step) {
  std::size_t n = step.size();
  constexpr ElementIndex kUnset = static_cast<ElementIndex>(-1);
  std::vector<ElementIndex> index(n, kUnset), lowlink(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<ElementIndex> stack;
  ElementIndex next_index = 0, next_comp = 0;

  struct Frame {
    ElementIndex v;
    std::size_t edge;
  };
  for (ElementIndex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < step[f.v].size()) {
        ElementIndex w = step[f.v][f.edge++];
        if (index[w] == kUnset) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          ElementIndex c = next_comp++;
          while (true) {
            ElementIndex w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = c;
            if (w == f.v) break;
          }
        }
        ElementIndex v = f.v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] =
              std::min(lowlink[frames.back().v], lowlink[v]);
      }
    }
  }
  // Renumber components by their smallest vertex.
  std::vector<ElementIndex> renumber(next_comp, kUnset);
  ElementIndex fresh = 0;
  for (ElementIndex v = 0; v < n; ++v)
    if (renumber[comp[v]] == kUnset) renumber[comp[v]] = fresh++;
  for (ElementIndex v = 0; v < n; ++v) comp[v] = renumber[comp[v]];
  return comp;
}

}  // namespace detail

// Build the left or right Cayley graph of S¹; an edge is a transition edge
// exactly when it crosses components (no path back to its source).
inline CayleyGraph build_cayley(const FiniteSemigroup& m, Side side) {
  if (!m.has_adjoined_identity)
    throw InputError("cayley graph requires a semigroup with adjoined identity");
  CayleyGraph g;
  g.side = side;
  g.monoid = m;
  std::size_t n = m.size();
  g.step.assign(n, std::vector<ElementIndex>(m.alphabet.size()));
  for (ElementIndex v = 0; v < n; ++v)
    for (LetterIndex a = 0; a < m.alphabet.size(); ++a)
      g.step[v][a] =
          side == Side::right ? m.mul(v, m.theta[a]) : m.mul(m.theta[a], v);
  g.scc = detail::strongly_connected_components(g.step);
  g.transition.assign(n, std::vector<bool>(m.alphabet.size()));
  for (ElementIndex v = 0; v < n; ++v)
    for (LetterIndex a = 0; a < m.alphabet.size(); ++a)
      g.transition[v][a] = g.scc[v] != g.scc[g.step[v][a]];

  // The adjoined identity is fresh, so nothing returns to it: every edge at
  // the identity must be a transition edge.
  for (LetterIndex a = 0; a < m.alphabet.size(); ++a)
    if (!g.transition[*m.identity_index][a])
      throw InvariantError("edge at the adjoined identity is not a transition");
  return g;
}

// Vertex sequence of the unique path labeled w from the identity: |w|+1 long.
inline std::vector<ElementIndex> path_of_word(const CayleyGraph& g,
                                              const Word& w) {
  std::vector<ElementIndex> path{*g.monoid.identity_index};
  for (LetterIndex a : w) {
    if (a >= g.monoid.alphabet.size())
      throw InputError("unknown letter in word");
    path.push_back(g.step[path.back()][a]);
  }
  return path;
}

// The transition edges along that path, in path order.
inline std::vector<Edge> transitions_of_word(const CayleyGraph& g,
                                             const Word& w) {
  std::vector<Edge> out;
  ElementIndex cur = *g.monoid.identity_index;
  for (LetterIndex a : w) {
    if (a >= g.monoid.alphabet.size())
      throw InputError("unknown letter in word");
    if (g.transition[cur][a]) out.push_back(g.edge(cur, a));
    cur = g.step[cur][a];
  }
  return out;
}

}  // namespace holonomy
