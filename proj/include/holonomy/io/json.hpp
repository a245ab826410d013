#pragma once

// JSON input (semigroup specs) and output (dumps of every structure).
//
// Input schema, strict (unknown fields rejected):
//   {"kind": "transformations", "alphabet": ["a", ...],
//    "generators": {"a": [1-based images], ...}, "cap": N?}
//   {"kind": "table", "alphabet": [...], "names": [...],
//    "table": [[0-based indices]], "theta": {"a": index, ...},
//    "force_associativity_check": bool?}
//
// All dumps order object keys alphabetically and arrays by index, so equal
// structures serialize to identical bytes.

#include <json.hpp>
#include <set>
#include <string>
#include <vector>

#include "holonomy/cayley.hpp"
#include "holonomy/chiswell.hpp"
#include "holonomy/core.hpp"
#include "holonomy/kr.hpp"
#include "holonomy/semaphore.hpp"
#include "holonomy/semigroup.hpp"
#include "holonomy/verify.hpp"

namespace holonomy {

namespace detail {

inline void expect_object(const nlohmann::json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
}

inline void reject_unknown_fields(const nlohmann::json& j,
                                  const std::set<std::string>& allowed,
                                  const std::string& what) {
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw InputError("unknown field '" + item.key() + "' in " + what);
}

inline const nlohmann::json& require_field(const nlohmann::json& j,
                                           const std::string& key,
                                           const std::string& what) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError("missing field '" + key + "' in " + what);
  return *it;
}

inline std::string as_string(const nlohmann::json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

inline std::size_t as_size(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_unsigned()) throw InputError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

inline std::vector<std::string> as_string_array(const nlohmann::json& j,
                                                const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(as_string(v, "entry of " + what));
  return out;
}

inline std::vector<ElementIndex> as_index_array(const nlohmann::json& j,
                                                const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of integers");
  std::vector<ElementIndex> out;
  for (const auto& v : j)
    out.push_back(static_cast<ElementIndex>(
        as_size(v, "entry of " + what)));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing semigroup specs
// ---------------------------------------------------------------------------

inline FiniteSemigroup semigroup_from_json(const nlohmann::json& j) {
  detail::expect_object(j, "semigroup spec");
  std::string kind =
      detail::as_string(detail::require_field(j, "kind", "semigroup spec"),
                        "'kind'");
  Alphabet alphabet = make_alphabet(detail::as_string_array(
      detail::require_field(j, "alphabet", "semigroup spec"), "'alphabet'"));

  if (kind == "transformations") {
    detail::reject_unknown_fields(
        j, {"kind", "alphabet", "generators", "cap"}, "transformations spec");
    const nlohmann::json& gens =
        detail::require_field(j, "generators", "transformations spec");
    detail::expect_object(gens, "'generators'");
    std::vector<Transformation> transformations;
    for (const auto& tok : alphabet.tokens) {
      auto it = gens.find(tok);
      if (it == gens.end())
        throw InputError("missing generator for letter '" + tok + "'");
      transformations.push_back(make_transformation(
          detail::as_index_array(*it, "generator '" + tok + "'")));
    }
    if (gens.size() != alphabet.size())
      detail::reject_unknown_fields(
          gens,
          std::set<std::string>(alphabet.tokens.begin(),
                                alphabet.tokens.end()),
          "'generators'");
    std::size_t cap = kDefaultClosureCap;
    if (j.contains("cap")) cap = detail::as_size(j["cap"], "'cap'");
    return from_transformations(alphabet, transformations, cap);
  }

  if (kind == "table") {
    detail::reject_unknown_fields(
        j,
        {"kind", "alphabet", "names", "table", "theta",
         "force_associativity_check"},
        "table spec");
    std::vector<std::string> names = detail::as_string_array(
        detail::require_field(j, "names", "table spec"), "'names'");
    const nlohmann::json& tj = detail::require_field(j, "table", "table spec");
    if (!tj.is_array()) throw InputError("'table' must be an array of rows");
    std::vector<std::vector<ElementIndex>> table;
    for (const auto& row : tj)
      table.push_back(detail::as_index_array(row, "table row"));
    const nlohmann::json& th = detail::require_field(j, "theta", "table spec");
    detail::expect_object(th, "'theta'");
    std::vector<ElementIndex> theta;
    for (const auto& tok : alphabet.tokens) {
      auto it = th.find(tok);
      if (it == th.end())
        throw InputError("missing theta entry for letter '" + tok + "'");
      theta.push_back(
          static_cast<ElementIndex>(detail::as_size(*it, "theta entry")));
    }
    if (th.size() != alphabet.size())
      detail::reject_unknown_fields(
          th,
          std::set<std::string>(alphabet.tokens.begin(),
                                alphabet.tokens.end()),
          "'theta'");
    TableOptions opts;
    if (j.contains("force_associativity_check")) {
      if (!j["force_associativity_check"].is_boolean())
        throw InputError("'force_associativity_check' must be a boolean");
      opts.force_associativity_check =
          j["force_associativity_check"].get<bool>();
    }
    return from_table(alphabet, names, table, theta, opts);
  }

  throw InputError("unknown kind '" + kind +
                   "' (expected transformations or table)");
}

inline FiniteSemigroup semigroup_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return semigroup_from_json(j);
}

// ---------------------------------------------------------------------------
// Dumps
// ---------------------------------------------------------------------------

// Emits a valid "table" spec, so parse(dump(s)) reconstructs s exactly.
inline nlohmann::json semigroup_to_json(const FiniteSemigroup& s) {
  if (s.has_adjoined_identity)
    throw InputError("export the semigroup before adjoining an identity");
  nlohmann::json j;
  j["kind"] = "table";
  j["alphabet"] = s.alphabet.tokens;
  j["names"] = s.names;
  nlohmann::json table = nlohmann::json::array();
  for (ElementIndex x = 0; x < s.size(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (ElementIndex y = 0; y < s.size(); ++y) row.push_back(s.mul(x, y));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  nlohmann::json theta = nlohmann::json::object();
  for (LetterIndex a = 0; a < s.alphabet.size(); ++a)
    theta[s.alphabet.token(a)] = s.theta[a];
  j["theta"] = std::move(theta);
  return j;
}

inline nlohmann::json edge_to_json(const FiniteSemigroup& base,
                                   const Edge& e) {
  nlohmann::json j;
  j["source"] = base.name(e.source);
  j["letter"] = base.alphabet.token(e.letter);
  j["target"] = base.name(e.target);
  return j;
}

inline nlohmann::json cayley_to_json(const CayleyGraph& g) {
  nlohmann::json j;
  j["side"] = side_name(g.side);
  j["vertices"] = g.monoid.names;
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::json ej = edge_to_json(g.monoid, e);
    ej["transition"] = g.is_transition(e.source, e.letter);
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  return j;
}

inline nlohmann::json kr_to_json(const KRSemigroup& t) {
  nlohmann::json j;
  j["side"] = side_name(t.side);
  j["size"] = t.size();
  j["identity"] = t.class_name(t.identity());
  nlohmann::json classes = nlohmann::json::array();
  for (ElementIndex i = 0; i < t.size(); ++i) {
    const KRElement& e = t.elements[i];
    nlohmann::json cj;
    cj["name"] = t.class_name(i);
    cj["word"] = word_to_string(t.base.alphabet, e.rep);
    cj["image"] = t.base.name(e.image);
    nlohmann::json hist = nlohmann::json::array();
    for (const Edge& edge : e.transitions)
      hist.push_back(edge_to_json(t.base, edge));
    cj["transitions"] = std::move(hist);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  nlohmann::json table = nlohmann::json::array();
  for (ElementIndex x = 0; x < t.size(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (ElementIndex y = 0; y < t.size(); ++y)
      row.push_back(t.multiply(x, y));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

inline nlohmann::json length_table_to_json(const LengthContext& ctx) {
  nlohmann::json j;
  j["ell"] = ctx.ell;
  nlohmann::json names = nlohmann::json::array();
  for (ElementIndex i = 0; i < ctx.size(); ++i)
    names.push_back(ctx.T.class_name(i));
  j["names"] = std::move(names);
  nlohmann::json table = nlohmann::json::array();
  for (ElementIndex a = 0; a < ctx.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (ElementIndex b = 0; b < ctx.size(); ++b) row.push_back(ctx.D[a][b]);
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

inline nlohmann::json tree_to_json(const LengthContext& ctx,
                                   const ChiswellTree& tree) {
  nlohmann::json j;
  j["ell"] = tree.ell;
  j["vertex_count"] = tree.vertex_count();
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    nlohmann::json vj;
    vj["id"] = v;
    vj["level"] = tree.depth(v);
    vj["label"] = tree.labels[v];
    if (tree.is_root(v))
      vj["parent"] = nullptr;
    else
      vj["parent"] = tree.parent(v);
    nlohmann::json members = nlohmann::json::array();
    for (ElementIndex m : tree.members[tree.depth(v)][tree.vertex_class[v]])
      members.push_back(ctx.T.class_name(m));
    vj["members"] = std::move(members);
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  return j;
}

inline nlohmann::json elliptic_map_to_json(const ChiswellTree& tree,
                                           const EllipticMap& m) {
  nlohmann::json j;
  j["provenance"] = m.provenance;
  nlohmann::json arrows = nlohmann::json::array();
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    nlohmann::json a;
    a["from"] = tree.labels[v];
    a["to"] = tree.labels[m.img[v]];
    arrows.push_back(std::move(a));
  }
  j["map"] = std::move(arrows);
  return j;
}

inline nlohmann::json code_to_json(const SemaphoreCode& code) {
  nlohmann::json j;
  j["alphabet"] = code.alphabet.tokens;
  j["window"] = code.window;
  j["words"] = code.words;
  nlohmann::json action = nlohmann::json::object();
  for (LetterIndex a = 0; a < code.alphabet.size(); ++a) {
    nlohmann::json col = nlohmann::json::array();
    for (ElementIndex i = 0; i < code.size(); ++i)
      col.push_back(code.words[code.action[i][a]]);
    action[code.alphabet.token(a)] = std::move(col);
  }
  j["action"] = std::move(action);
  return j;
}

inline nlohmann::json reports_to_json(const std::vector<RunReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json rj;
    rj["subject"] = r.subject;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
      nlohmann::json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["skipped"] = c.skipped;
      cj["detail"] = c.detail;
      cj["millis"] = c.millis;
      checks.push_back(std::move(cj));
    }
    rj["checks"] = std::move(checks);
    j.push_back(std::move(rj));
  }
  return j;
}

inline std::string json_text(const nlohmann::json& j) {
  return j.dump(2) + "\n";
}

}  // namespace holonomy
