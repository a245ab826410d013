#pragma once

// The length function on expansion classes, the rooted tree it induces, and
// the left/right elliptic-map representations with their checks.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "holonomy/core.hpp"
#include "holonomy/greens.hpp"
#include "holonomy/kr.hpp"

namespace holonomy {

// Number of leading transition edges shared by the two classes' histories,
// comparing full (source, letter, target) triples.
inline std::size_t xi(const KRSemigroup& t, ElementIndex a, ElementIndex b) {
  const auto& e = t.elements[a].transitions;
  const auto& f = t.elements[b].transitions;
  std::size_t i = 0;
  while (i < e.size() && i < f.size() && e[i] == f[i]) ++i;
  return i;
}

// The expansion together with ell = 2 * max height of the base monoid and
// the memoized symmetric table of pairwise lengths.
struct LengthContext {
  KRSemigroup T;
  std::size_t ell = 0;
  std::vector<std::vector<std::uint32_t>> D;

  std::size_t size() const { return T.size(); }
  std::size_t height(ElementIndex base_element) const {
    return T.base_greens.heights[base_element];
  }
  std::uint32_t length(ElementIndex a, ElementIndex b) const {
    return D[a][b];
  }
};

namespace detail {

// The four-case definition. The shared-prefix count compares full edge
// triples; the tiebreak case at index k compares only edge targets.
inline std::uint32_t raw_length(const KRSemigroup& t,
                                const std::vector<std::size_t>& h,
                                std::size_t ell, ElementIndex a,
                                ElementIndex b) {
  if (a == b) return static_cast<std::uint32_t>(ell);
  std::size_t k = xi(t, a, b);
  if (k == 0) return 0;
  const auto& e = t.elements[a].transitions;
  const auto& f = t.elements[b].transitions;
  std::uint32_t shared = static_cast<std::uint32_t>(2 * h[e[k - 1].target]);
  if (k < e.size() && k < f.size() && e[k].target == f[k].target)
    return shared;
  return shared - 1;
}

}  // namespace detail

inline LengthContext make_length_context(KRSemigroup t) {
  LengthContext ctx;
  ctx.ell = 2 * t.base_greens.max_height();
  std::size_t n = t.size();
  ctx.D.assign(n, std::vector<std::uint32_t>(n, 0));
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = a; b < n; ++b) {
      std::uint32_t v =
          detail::raw_length(t, t.base_greens.heights, ctx.ell, a, b);
      if (v > ctx.ell)
        throw InvariantError("length value exceeds ell");
      if (v == ctx.ell && a != b)
        throw InvariantError("distinct classes at maximal length");
      ctx.D[a][b] = ctx.D[b][a] = v;
    }
  }
  ctx.T = std::move(t);
  return ctx;
}

inline std::uint32_t length_D(const LengthContext& ctx, ElementIndex a,
                              ElementIndex b) {
  return ctx.D[a][b];
}

// ---------------------------------------------------------------------------
// The rooted tree
// ---------------------------------------------------------------------------

// Vertices are level-k classes of the relation "same when the length is at
// least k", linked level to level along each expansion element; the root is
// the whole set at level 0. Class ids at a level are ordered by least member.
struct ChiswellTree {
  std::size_t ell = 0;
  std::vector<std::vector<ElementIndex>> class_of;  // level -> element -> class
  std::vector<std::vector<std::vector<ElementIndex>>> members;
  std::vector<std::size_t> offsets;     // level -> first vertex id
  std::vector<std::uint32_t> vertex_level;
  std::vector<ElementIndex> vertex_class;
  std::vector<std::size_t> parent_;     // per vertex; root points to itself
  std::vector<std::string> labels;      // "[k,rep]" display names

  std::size_t vertex_count() const { return vertex_level.size(); }
  std::size_t root() const { return 0; }

  std::size_t vertex(std::size_t level, ElementIndex cls) const {
    return offsets[level] + cls;
  }
  std::size_t depth(std::size_t v) const { return vertex_level[v]; }
  bool is_root(std::size_t v) const { return v == 0; }
  std::size_t parent(std::size_t v) const { return parent_[v]; }

  // Vertex holding a given expansion element at a level.
  std::size_t vertex_of(std::size_t level, ElementIndex element) const {
    return vertex(level, class_of[level][element]);
  }

  std::vector<std::size_t> level_counts() const {
    std::vector<std::size_t> out;
    for (const auto& m : members) out.push_back(m.size());
    return out;
  }
};

inline ChiswellTree build_tree(const LengthContext& ctx) {
  std::size_t n = ctx.size();
  ChiswellTree tree;
  tree.ell = ctx.ell;
  tree.class_of.resize(ctx.ell + 1);
  tree.members.resize(ctx.ell + 1);

  for (std::size_t k = 0; k <= ctx.ell; ++k) {
    auto& cls = tree.class_of[k];
    auto& mem = tree.members[k];
    cls.assign(n, 0);
    for (ElementIndex e = 0; e < n; ++e) {
      bool placed = false;
      for (ElementIndex c = 0; c < mem.size() && !placed; ++c) {
        if (ctx.D[e][mem[c][0]] >= k) {
          cls[e] = c;
          mem[c].push_back(e);
          placed = true;
        }
      }
      if (!placed) {
        cls[e] = static_cast<ElementIndex>(mem.size());
        mem.push_back({e});
      }
    }
    // The level relation must be an equivalence: same class iff length >= k.
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        if ((cls[a] == cls[b]) != (ctx.D[a][b] >= k))
          throw InvariantError("level relation is not an equivalence at level " +
                               std::to_string(k));
    // Levels refine downward: joined at level k implies joined at level k-1,
    // which is what makes the cross-level links well-defined.
    if (k > 0)
      for (ElementIndex a = 0; a < n; ++a)
        for (ElementIndex b = 0; b < n; ++b)
          if (cls[a] == cls[b] &&
              tree.class_of[k - 1][a] != tree.class_of[k - 1][b])
            throw InvariantError("level " + std::to_string(k) +
                                 " does not refine its parent level");
  }
  if (tree.members[0].size() != 1)
    throw InvariantError("level 0 must have exactly one class");

  tree.offsets.resize(ctx.ell + 1);
  std::size_t total = 0;
  for (std::size_t k = 0; k <= ctx.ell; ++k) {
    tree.offsets[k] = total;
    total += tree.members[k].size();
  }
  tree.vertex_level.resize(total);
  tree.vertex_class.resize(total);
  tree.parent_.resize(total);
  tree.labels.resize(total);
  for (std::size_t k = 0; k <= ctx.ell; ++k) {
    for (ElementIndex c = 0; c < tree.members[k].size(); ++c) {
      std::size_t v = tree.vertex(k, c);
      tree.vertex_level[v] = static_cast<std::uint32_t>(k);
      tree.vertex_class[v] = c;
      ElementIndex least = tree.members[k][c][0];
      tree.parent_[v] =
          k == 0 ? v : tree.vertex(k - 1, tree.class_of[k - 1][least]);
      tree.labels[v] =
          "[" + std::to_string(k) + "," + ctx.T.class_name(least) + "]";
    }
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Elliptic maps
// ---------------------------------------------------------------------------

struct EllipticMap {
  const ChiswellTree* tree = nullptr;
  std::vector<std::size_t> img;  // per vertex id
  std::string provenance;

  std::size_t operator()(std::size_t v) const { return img[v]; }

  friend bool operator==(const EllipticMap& f, const EllipticMap& g) {
    return f.tree == g.tree && f.img == g.img;
  }
};

inline EllipticMap identity_map(const ChiswellTree& tree) {
  EllipticMap m;
  m.tree = &tree;
  m.img.resize(tree.vertex_count());
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) m.img[v] = v;
  m.provenance = "id";
  return m;
}

namespace detail {

// The level-k image of the class of beta is the class of alpha*beta (left)
// or beta*alpha (right); well-definedness is asserted member by member.
inline EllipticMap action_map(const LengthContext& ctx,
                              const ChiswellTree& tree, ElementIndex alpha,
                              Side action_side) {
  EllipticMap m;
  m.tree = &tree;
  m.img.assign(tree.vertex_count(), 0);
  m.provenance = std::string(action_side == Side::left ? "left" : "right") +
                 ":" + ctx.T.class_name(alpha);
  for (std::size_t k = 0; k <= tree.ell; ++k) {
    for (ElementIndex c = 0; c < tree.members[k].size(); ++c) {
      bool first = true;
      ElementIndex target = 0;
      for (ElementIndex beta : tree.members[k][c]) {
        ElementIndex prod = action_side == Side::left
                                ? ctx.T.multiply(alpha, beta)
                                : ctx.T.multiply(beta, alpha);
        ElementIndex tc = tree.class_of[k][prod];
        if (first) {
          target = tc;
          first = false;
        } else if (tc != target) {
          throw InvariantError("action of " + ctx.T.class_name(alpha) +
                               " is not well-defined on level " +
                               std::to_string(k));
        }
      }
      m.img[tree.vertex(k, c)] = tree.vertex(k, target);
    }
  }
  return m;
}

}  // namespace detail

inline EllipticMap left_action(const LengthContext& ctx,
                               const ChiswellTree& tree, ElementIndex alpha) {
  return detail::action_map(ctx, tree, alpha, Side::left);
}

inline EllipticMap right_action(const LengthContext& ctx,
                                const ChiswellTree& tree, ElementIndex alpha) {
  return detail::action_map(ctx, tree, alpha, Side::right);
}

// Depth preservation and edge preservation, checked exhaustively.
inline CheckResult is_elliptic(const ChiswellTree& tree,
                               const EllipticMap& m) {
  if (m.tree != &tree || m.img.size() != tree.vertex_count())
    return CheckResult::fail("elliptic", "map does not belong to this tree");
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (tree.depth(m.img[v]) != tree.depth(v))
      return CheckResult::fail(
          "elliptic", "depth not preserved at " + tree.labels[v] + " -> " +
                          tree.labels[m.img[v]]);
    if (!tree.is_root(v) && tree.parent(m.img[v]) != m.img[tree.parent(v)])
      return CheckResult::fail(
          "elliptic", "edge to parent not preserved at " + tree.labels[v]);
  }
  return CheckResult::ok("elliptic");
}

// Classical composition: g is applied first.
inline EllipticMap em_compose(const EllipticMap& f, const EllipticMap& g) {
  if (f.tree == nullptr || f.tree != g.tree)
    throw InputError("cannot compose elliptic maps over different trees");
  EllipticMap m;
  m.tree = f.tree;
  m.img.resize(f.img.size());
  for (std::size_t v = 0; v < g.img.size(); ++v) m.img[v] = f.img[g.img[v]];
  m.provenance = "(" + f.provenance + " o " + g.provenance + ")";
  return m;
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

struct Representation {
  Side action_side = Side::left;
  std::vector<EllipticMap> maps;  // per expansion element
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass && !c.skipped) return false;
    return true;
  }
};

// All action maps of one side, with the structure checks: every map is
// elliptic, the identity acts trivially, products compose classically on the
// left side and in reversed order on the right side (actions written on the
// right compose left to right), and the assignment is injective.
inline Representation representation(const LengthContext& ctx,
                                     const ChiswellTree& tree,
                                     Side action_side) {
  Representation rep;
  rep.action_side = action_side;
  std::size_t n = ctx.size();
  for (ElementIndex x = 0; x < n; ++x)
    rep.maps.push_back(detail::action_map(ctx, tree, x, action_side));

  bool all_elliptic = true;
  std::string elliptic_detail;
  for (ElementIndex x = 0; x < n && all_elliptic; ++x) {
    auto r = is_elliptic(tree, rep.maps[x]);
    if (!r.pass) {
      all_elliptic = false;
      elliptic_detail = ctx.T.class_name(x) + ": " + r.detail;
    }
  }
  rep.checks.push_back(all_elliptic
                           ? CheckResult::ok("every action map is elliptic")
                           : CheckResult::fail("every action map is elliptic",
                                               elliptic_detail));

  rep.checks.push_back(
      rep.maps[ctx.T.identity()] == identity_map(tree)
          ? CheckResult::ok("identity acts trivially")
          : CheckResult::fail("identity acts trivially",
                              "identity map differs"));

  bool hom = true;
  std::string hom_detail;
  for (ElementIndex x = 0; x < n && hom; ++x) {
    for (ElementIndex y = 0; y < n && hom; ++y) {
      ElementIndex xy = ctx.T.multiply(x, y);
      EllipticMap expect = action_side == Side::left
                               ? em_compose(rep.maps[x], rep.maps[y])
                               : em_compose(rep.maps[y], rep.maps[x]);
      if (!(rep.maps[xy] == expect)) {
        hom = false;
        hom_detail = "at (" + ctx.T.class_name(x) + ", " +
                     ctx.T.class_name(y) + ")";
      }
    }
  }
  std::string law = action_side == Side::left
                        ? "left action is a homomorphism"
                        : "right action is an anti-homomorphism";
  rep.checks.push_back(hom ? CheckResult::ok(law)
                           : CheckResult::fail(law, hom_detail));

  std::set<std::vector<std::size_t>> images;
  for (const auto& m : rep.maps) images.insert(m.img);
  rep.checks.push_back(
      images.size() == n
          ? CheckResult::ok("representation is faithful")
          : CheckResult::fail("representation is faithful",
                              "two elements share an action map"));
  return rep;
}

}  // namespace holonomy
