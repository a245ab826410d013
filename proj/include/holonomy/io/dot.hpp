#pragma once

// Graphviz exports. All output is index-ordered, so equal structures render
// to identical bytes. Transition edges are drawn bold; action overlays are
// drawn as red dashed arrows on top of the tree.

#include <string>

#include "holonomy/cayley.hpp"
#include "holonomy/chiswell.hpp"
#include "holonomy/kr.hpp"

namespace holonomy {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// True for the vertices of the identity's singleton chain at levels >= 1.
inline bool on_identity_chain(const ChiswellTree& tree, std::size_t v) {
  std::size_t level = tree.depth(v);
  if (level == 0) return false;
  if (tree.vertex(level, tree.class_of[level][0]) != v) return false;
  return tree.members[level][tree.vertex_class[v]].size() == 1;
}

inline std::string tree_body(const ChiswellTree& tree,
                             bool hide_identity_chain) {
  std::string out;
  out += "  node [shape=box];\n";
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (hide_identity_chain && on_identity_chain(tree, v)) continue;
    out += "  t" + std::to_string(v) + " [label=\"" +
           dot_escape(tree.labels[v]) + "\"];\n";
  }
  for (std::size_t level = 0; level <= tree.ell; ++level) {
    std::string row;
    for (std::size_t c = 0; c < tree.members[level].size(); ++c) {
      std::size_t v = tree.vertex(level, c);
      if (hide_identity_chain && on_identity_chain(tree, v)) continue;
      row += " t" + std::to_string(v) + ";";
    }
    if (!row.empty()) out += "  { rank=same;" + row + " }\n";
  }
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (tree.is_root(v)) continue;
    if (hide_identity_chain && on_identity_chain(tree, v)) continue;
    out += "  t" + std::to_string(v) + " -> t" +
           std::to_string(tree.parent(v)) + " [dir=none];\n";
  }
  return out;
}

}  // namespace detail

inline std::string cayley_to_dot(const CayleyGraph& g,
                                 const std::string& graph_name = "cayley") {
  std::string out = "digraph " + graph_name + " {\n";
  out += "  rankdir=LR;\n  node [shape=ellipse];\n";
  for (ElementIndex v = 0; v < g.vertex_count(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" +
           detail::dot_escape(g.monoid.name(v)) + "\"];\n";
  for (const Edge& e : g.edges()) {
    out += "  v" + std::to_string(e.source) + " -> v" +
           std::to_string(e.target) + " [label=\"" +
           detail::dot_escape(g.monoid.alphabet.token(e.letter)) + "\"";
    if (g.is_transition(e.source, e.letter)) out += ", style=bold";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

// The expansion drawn as its own right Cayley graph (the class automaton).
inline std::string kr_to_dot(const KRSemigroup& t) {
  return cayley_to_dot(build_cayley(as_semigroup(t), Side::right),
                       "expansion");
}

inline std::string tree_to_dot(const ChiswellTree& tree,
                               bool hide_identity_chain = false) {
  std::string out = "digraph tree {\n";
  out += "  rankdir=BT;\n";
  out += detail::tree_body(tree, hide_identity_chain);
  out += "}\n";
  return out;
}

inline std::string action_overlay_to_dot(const ChiswellTree& tree,
                                         const EllipticMap& m,
                                         bool hide_identity_chain = false) {
  std::string out = "digraph action {\n";
  out += "  rankdir=BT;\n";
  out += "  label=\"" + detail::dot_escape(m.provenance) +
         "\";\n  labelloc=t;\n";
  out += detail::tree_body(tree, hide_identity_chain);
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (m.img[v] == v) continue;
    if (hide_identity_chain && (detail::on_identity_chain(tree, v) ||
                                detail::on_identity_chain(tree, m.img[v])))
      continue;
    out += "  t" + std::to_string(v) + " -> t" + std::to_string(m.img[v]) +
           " [color=red, style=dashed, constraint=false];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace holonomy
