// Length function, rooted tree, and elliptic actions on the fixtures,
// cross-checked against the frozen values and the oracle.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "golden.hpp"
#include "holonomy/chiswell.hpp"
#include "oracle.hpp"

namespace {

using holonomy::ElementIndex;

holonomy::LengthContext lz2_ctx() {
  return holonomy::make_length_context(holonomy::build_kr_left(
      holonomy::from_table(holonomy::make_alphabet("ab"), {"a", "b"},
                           {{0, 0}, {1, 1}}, {0, 1})));
}

holonomy::LengthContext t2_ctx() {
  return holonomy::make_length_context(
      holonomy::build_kr_left(holonomy::from_transformations(
          holonomy::make_alphabet("ab"),
          {holonomy::make_transformation({2, 1}),
           holonomy::make_transformation({1, 1})})));
}

ElementIndex by_rep(const holonomy::KRSemigroup& t, const std::string& rep) {
  for (ElementIndex i = 0; i < t.size(); ++i)
    if (holonomy::word_to_string(t.base.alphabet, t.elements[i].rep) == rep)
      return i;
  FAIL("no class with representative '" << rep << "'");
  return 0;
}

// "k:rep" vertex keys matching the convention of the frozen action maps
// (the identity class renders as the empty representative).
std::string vertex_key(const holonomy::LengthContext& ctx,
                       const holonomy::ChiswellTree& tree, std::size_t v) {
  ElementIndex least = tree.members[tree.depth(v)][tree.vertex_class[v]][0];
  return std::to_string(tree.depth(v)) + ":" +
         holonomy::word_to_string(ctx.T.base.alphabet,
                                  ctx.T.elements[least].rep);
}

golden::ActionMap as_action_map(const holonomy::LengthContext& ctx,
                                const holonomy::ChiswellTree& tree,
                                const holonomy::EllipticMap& m) {
  golden::ActionMap out;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v)
    out[vertex_key(ctx, tree, v)] = vertex_key(ctx, tree, m.img[v]);
  return out;
}

std::vector<std::vector<std::uint32_t>> golden_matrix(
    const holonomy::KRSemigroup& t, std::size_t ell,
    const std::vector<std::pair<std::pair<std::string, std::string>,
                                std::size_t>>& pairs) {
  std::size_t n = t.size();
  std::vector<std::vector<std::uint32_t>> D(
      n, std::vector<std::uint32_t>(n, 0));
  for (ElementIndex i = 0; i < n; ++i)
    D[i][i] = static_cast<std::uint32_t>(ell);
  for (const auto& [pr, v] : pairs) {
    ElementIndex i = by_rep(t, pr.first);
    ElementIndex j = by_rep(t, pr.second);
    D[i][j] = D[j][i] = static_cast<std::uint32_t>(v);
  }
  return D;
}

}  // namespace

TEST_CASE("shared transition prefixes") {
  auto z = lz2_ctx();
  REQUIRE(holonomy::xi(z.T, by_rep(z.T, "a"), by_rep(z.T, "b")) == 0);
  for (ElementIndex x = 0; x < z.size(); ++x)
    REQUIRE(holonomy::xi(z.T, x, x) == z.T.elements[x].transitions.size());

  auto t = t2_ctx();
  REQUIRE(holonomy::xi(t.T, by_rep(t.T, "a"), by_rep(t.T, "ab")) == 1);
}

TEST_CASE("length tables match the frozen values") {
  auto z = lz2_ctx();
  REQUIRE(z.ell == golden::lz2_ell);
  REQUIRE(z.D == golden_matrix(z.T, golden::lz2_ell, golden::lz2_D));

  auto t = t2_ctx();
  REQUIRE(t.ell == golden::t2_ell);
  REQUIRE(t.D == golden_matrix(t.T, golden::t2_ell, golden::t2_D));
}

TEST_CASE("length table matches the oracle pair for pair") {
  auto t = t2_ctx();
  auto orc = oracle::build_kr_right(
      oracle::opposite(oracle::adjoin_one(oracle::transf_closure({{1, 0},
                                                                  {0, 0}}))),
      2);
  auto h = oracle::heights(orc.base);
  for (ElementIndex a = 0; a < t.size(); ++a)
    for (ElementIndex b = 0; b < t.size(); ++b)
      REQUIRE(t.D[a][b] == oracle::length_D(orc, h, t.ell, a, b));
}

TEST_CASE("trees have the frozen level profiles") {
  auto z = lz2_ctx();
  auto zt = holonomy::build_tree(z);
  REQUIRE(zt.level_counts() == golden::lz2_tree_levels);
  REQUIRE(zt.vertex_count() == 9);

  auto t = t2_ctx();
  auto tt = holonomy::build_tree(t);
  REQUIRE(tt.level_counts() == golden::t2_tree_levels);

  // Level-1 blocks by representative.
  std::vector<std::vector<std::string>> blocks;
  for (const auto& mem : tt.members[1]) {
    std::vector<std::string> block;
    for (ElementIndex e : mem)
      block.push_back(
          holonomy::word_to_string(t.T.base.alphabet, t.T.elements[e].rep));
    blocks.push_back(block);
  }
  REQUIRE(blocks == golden::t2_level1);
}

TEST_CASE("tree partitions agree with the oracle") {
  auto t = t2_ctx();
  auto tt = holonomy::build_tree(t);
  auto orc = oracle::build_kr_right(
      oracle::opposite(oracle::adjoin_one(oracle::transf_closure({{1, 0},
                                                                  {0, 0}}))),
      2);
  auto h = oracle::heights(orc.base);
  auto ot = oracle::build_tree(orc, h, golden::t2_ell);
  for (std::size_t k = 0; k <= t.ell; ++k)
    REQUIRE(std::vector<oracle::Idx>(tt.class_of[k].begin(),
                                     tt.class_of[k].end()) ==
            ot.level_class[k]);
}

TEST_CASE("tree structure: root, labels, parents") {
  auto z = lz2_ctx();
  auto zt = holonomy::build_tree(z);
  REQUIRE(zt.labels[zt.root()] == "[0,1]");
  REQUIRE(zt.depth(zt.root()) == 0);
  // Depth equals the number of parent steps to the root.
  for (std::size_t v = 0; v < zt.vertex_count(); ++v) {
    std::size_t steps = 0, cur = v;
    while (!zt.is_root(cur)) {
      cur = zt.parent(cur);
      ++steps;
    }
    REQUIRE(steps == zt.depth(v));
  }
  // A representative label at each level of the identity chain.
  REQUIRE(zt.labels[zt.vertex_of(1, z.T.identity())] == "[1,1]");
  REQUIRE(zt.labels[zt.vertex_of(2, by_rep(z.T, "ab"))] == "[2,ab]");
}

TEST_CASE("letter actions on the left-zero tree match the frozen maps") {
  auto z = lz2_ctx();
  auto tree = holonomy::build_tree(z);
  ElementIndex a = by_rep(z.T, "a"), b = by_rep(z.T, "b");
  REQUIRE(as_action_map(z, tree, holonomy::left_action(z, tree, a)) ==
          golden::lz2_left_a);
  REQUIRE(as_action_map(z, tree, holonomy::left_action(z, tree, b)) ==
          golden::lz2_left_b);
  REQUIRE(as_action_map(z, tree, holonomy::right_action(z, tree, a)) ==
          golden::lz2_right_a);
  REQUIRE(as_action_map(z, tree, holonomy::right_action(z, tree, b)) ==
          golden::lz2_right_b);
}

TEST_CASE("left action of a on the transformation tree") {
  auto t = t2_ctx();
  auto tree = holonomy::build_tree(t);
  auto act = holonomy::left_action(t, tree, by_rep(t.T, "a"));
  for (std::size_t k = 2; k <= t.ell; ++k) {
    for (const auto& [from, to] : golden::t2_left_a_deep) {
      std::size_t v = tree.vertex_of(k, by_rep(t.T, from));
      REQUIRE(act.img[v] == tree.vertex_of(k, by_rep(t.T, to)));
    }
  }
  std::size_t a1 = tree.vertex_of(1, by_rep(t.T, "a"));
  for (ElementIndex c = 0; c < tree.members[1].size(); ++c)
    REQUIRE(act.img[tree.vertex(1, c)] == a1);
}

TEST_CASE("identity action and ellipticity") {
  auto z = lz2_ctx();
  auto tree = holonomy::build_tree(z);
  REQUIRE(holonomy::left_action(z, tree, z.T.identity()) ==
          holonomy::identity_map(tree));
  REQUIRE(holonomy::is_elliptic(tree, holonomy::identity_map(tree)).pass);
  for (ElementIndex x = 0; x < z.size(); ++x) {
    REQUIRE(holonomy::is_elliptic(tree, holonomy::left_action(z, tree, x)).pass);
    REQUIRE(
        holonomy::is_elliptic(tree, holonomy::right_action(z, tree, x)).pass);
  }
}

TEST_CASE("corrupted maps are rejected with a witness") {
  auto z = lz2_ctx();
  auto tree = holonomy::build_tree(z);

  auto depth_breaker = holonomy::identity_map(tree);
  std::swap(depth_breaker.img[tree.root()],
            depth_breaker.img[tree.vertex(1, 0)]);
  auto r1 = holonomy::is_elliptic(tree, depth_breaker);
  REQUIRE_FALSE(r1.pass);
  REQUIRE_THAT(r1.detail, Catch::Matchers::ContainsSubstring("depth"));

  // Swapping two level-2 vertices with different parents breaks an edge.
  auto edge_breaker = holonomy::identity_map(tree);
  std::size_t va = tree.vertex_of(2, by_rep(z.T, "a"));
  std::size_t vb = tree.vertex_of(2, by_rep(z.T, "b"));
  std::swap(edge_breaker.img[va], edge_breaker.img[vb]);
  auto r2 = holonomy::is_elliptic(tree, edge_breaker);
  REQUIRE_FALSE(r2.pass);
  REQUIRE_THAT(r2.detail, Catch::Matchers::ContainsSubstring("edge"));
}

TEST_CASE("representations are lawful and faithful") {
  auto z = lz2_ctx();
  auto ztree = holonomy::build_tree(z);
  auto zl = holonomy::representation(z, ztree, holonomy::Side::left);
  REQUIRE(zl.pass());
  REQUIRE(zl.maps.size() == 5);

  auto zr = holonomy::representation(z, ztree, holonomy::Side::right);
  REQUIRE(zr.pass());

  auto t = t2_ctx();
  auto ttree = holonomy::build_tree(t);
  auto tl = holonomy::representation(t, ttree, holonomy::Side::left);
  REQUIRE(tl.pass());
  REQUIRE(tl.maps.size() == 6);
  auto tr = holonomy::representation(t, ttree, holonomy::Side::right);
  REQUIRE(tr.pass());
}

TEST_CASE("composition of elliptic maps") {
  auto z = lz2_ctx();
  auto tree = holonomy::build_tree(z);
  ElementIndex a = by_rep(z.T, "a"), b = by_rep(z.T, "b");

  auto fa = holonomy::left_action(z, tree, a);
  REQUIRE(holonomy::em_compose(fa, holonomy::identity_map(tree)) == fa);

  auto fb = holonomy::left_action(z, tree, b);
  REQUIRE(holonomy::em_compose(fa, fb) ==
          holonomy::left_action(z, tree, z.T.multiply(a, b)));

  // Right actions compose left to right: v·a then ·b equals v·(ab).
  auto ra = holonomy::right_action(z, tree, a);
  auto rb = holonomy::right_action(z, tree, b);
  REQUIRE(holonomy::em_compose(rb, ra) ==
          holonomy::right_action(z, tree, z.T.multiply(a, b)));

  auto t = t2_ctx();
  auto other = holonomy::build_tree(t);
  REQUIRE_THROWS_AS(
      holonomy::em_compose(fa, holonomy::identity_map(other)),
      holonomy::InputError);
}
