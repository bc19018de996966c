#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rover/cantor.hpp"
#include "rover/errors.hpp"

using namespace rover;
using testutil::forest_apply;

TEST_CASE("tree_from_leaves accepts complete prefix codes") {
  Tree t = Tree::from_leaves({""});
  CHECK(t.leaf_count() == 1);
  CHECK(t.is_trivial());

  Tree caret = Tree::from_leaves({"00", "01", "1"});
  CHECK(caret.leaf_count() == 3);
  CHECK(caret.leaf(0) == "00");
  CHECK(caret.leaf(1) == "01");
  CHECK(caret.leaf(2) == "1");

  // unsorted input lands sorted
  Tree sorted = Tree::from_leaves({"1", "01", "00"});
  CHECK(sorted == caret);
}

TEST_CASE("tree_from_leaves rejects bad codes") {
  using testutil::thrown_errc;
  CHECK(thrown_errc([] { Tree::from_leaves({"0", "00"}); }) == Errc::prefix_violation);
  CHECK(thrown_errc([] { Tree::from_leaves({"0"}); }) == Errc::incomplete_code);
  CHECK(thrown_errc([] { Tree::from_leaves({"0", "10"}); }) == Errc::incomplete_code);
  CHECK(thrown_errc([] { Tree::from_leaves({"0", "1", "1"}); }) == Errc::prefix_violation);
  CHECK_THROWS_AS(Tree::from_leaves({}), Error);
}

TEST_CASE("tree_from_leaves round-trips generated trees") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Tree t = testutil::random_tree(rng, static_cast<int>(rng() % 8));
    CHECK(Tree::from_leaves(t.leaves()) == t);
  }
}

TEST_CASE("split_at splits exactly one root") {
  Forest x = split_at(1, 0);
  CHECK(x.roots() == 1);
  CHECK(x.leaf_count() == 2);
  CHECK(x.tree(0) == Tree::from_leaves({"0", "1"}));

  Forest f = split_at(2, 0);
  CHECK(f.tree(0) == Tree::from_leaves({"0", "1"}));
  CHECK(f.tree(1).is_trivial());

  CHECK(testutil::thrown_errc([] { split_at(2, 2); }) == Errc::index_out_of_range);
  CHECK(testutil::thrown_errc([] { split_at(2, -1); }) == Errc::index_out_of_range);
}

TEST_CASE("forest_compose grafts and concatenates addresses") {
  Forest x = split_at(1, 0);
  CHECK(forest_compose(Forest::trivial(3), split_at(3, 1)) == split_at(3, 1));
  CHECK(forest_compose(split_at(3, 1), Forest::trivial(4)) == split_at(3, 1));

  Forest left = forest_compose(x, split_at(2, 0));
  CHECK(left == Forest::single(Tree::from_leaves({"00", "01", "1"})));
  Forest right = forest_compose(x, split_at(2, 1));
  CHECK(right == Forest::single(Tree::from_leaves({"0", "10", "11"})));

  CHECK(testutil::thrown_errc([&] { forest_compose(x, split_at(3, 0)); }) ==
        Errc::arity_mismatch);
}

TEST_CASE("forest_compose is associative") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    int m = 1 + static_cast<int>(rng() % 3);
    Forest a = testutil::random_forest(rng, m, static_cast<int>(rng() % 4));
    Forest b = testutil::random_forest(rng, a.leaf_count(), static_cast<int>(rng() % 4));
    Forest c = testutil::random_forest(rng, b.leaf_count(), static_cast<int>(rng() % 4));
    CHECK(forest_compose(forest_compose(a, b), c) == forest_compose(a, forest_compose(b, c)));
  }
}

TEST_CASE("common_refinement joins two trees") {
  Tree t = Tree::from_leaves({"00", "01", "1"});
  Refinement same = common_refinement(t, t);
  CHECK(same.refined == t);
  CHECK(same.on_first.is_trivial());
  CHECK(same.on_second.is_trivial());

  Tree s = Tree::from_leaves({"0", "10", "11"});
  Refinement r = common_refinement(t, s);
  CHECK(r.refined == Tree::from_leaves({"00", "01", "10", "11"}));
  CHECK(forest_compose(Forest::single(t), r.on_first) == Forest::single(r.refined));
  CHECK(forest_compose(Forest::single(s), r.on_second) == Forest::single(r.refined));
  // t's leaf 3 ("1") splits, s's leaf 1 ("0") splits
  CHECK(r.on_first.tree(2) == Tree::from_leaves({"0", "1"}));
  CHECK(r.on_second.tree(0) == Tree::from_leaves({"0", "1"}));

  Refinement root = common_refinement(Tree::from_leaves({"0", "1"}), Tree::trivial());
  CHECK(root.refined == Tree::from_leaves({"0", "1"}));
  CHECK(root.on_first.is_trivial());
  CHECK(root.on_second == Forest::single(Tree::from_leaves({"0", "1"})));
}

TEST_CASE("common_refinement is commutative and associative in the joined tree") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    Tree a = testutil::random_tree(rng, static_cast<int>(rng() % 5));
    Tree b = testutil::random_tree(rng, static_cast<int>(rng() % 5));
    Tree c = testutil::random_tree(rng, static_cast<int>(rng() % 5));
    CHECK(common_refinement(a, b).refined == common_refinement(b, a).refined);
    Tree ab_c = common_refinement(common_refinement(a, b).refined, c).refined;
    Tree a_bc = common_refinement(a, common_refinement(b, c).refined).refined;
    CHECK(ab_c == a_bc);
    Refinement r = common_refinement(a, b);
    CHECK(forest_compose(Forest::single(a), r.on_first) == Forest::single(r.refined));
    CHECK(forest_compose(Forest::single(b), r.on_second) == Forest::single(r.refined));
  }
}

TEST_CASE("permutation_pushdown solves f p = p' f'") {
  Forest f = split_at(2, 0);
  PermPushdown id = permutation_pushdown(f, Permutation::identity(2));
  CHECK(id.alpha.is_identity());
  CHECK(id.forest == f);

  // root swap on a split first component: leaves (1,2,3) -> blocks (2),(1,2)
  PermPushdown r = permutation_pushdown(f, Permutation({1, 0}));
  CHECK(r.forest == split_at(2, 1));
  CHECK(r.alpha == Permutation({2, 0, 1}));  // cycle sending 1->3, 2->1, 3->2 in 1-based terms

  PermPushdown t = permutation_pushdown(Forest::trivial(3), Permutation({2, 0, 1}));
  CHECK(t.forest == Forest::trivial(3));
  CHECK(t.alpha == Permutation({2, 0, 1}));
}

TEST_CASE("permutation_pushdown agrees pointwise with the swap it encodes") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 60; ++i) {
    int m = 1 + static_cast<int>(rng() % 4);
    Forest f = testutil::random_forest(rng, m, static_cast<int>(rng() % 5));
    Permutation alpha = testutil::random_permutation(rng, m);
    PermPushdown pd = permutation_pushdown(f, alpha);
    int depth = f.max_depth() + 1;
    for (int root = 0; root < m; ++root) {
      for (int trial = 0; trial < 8; ++trial) {
        std::string bits = testutil::random_bits(rng, depth);
        // left side: alpha moves the component, then f splits
        auto left = forest_apply(f, alpha(root), bits);
        // right side: pd.forest splits, then pd.alpha moves the leaf
        auto right = forest_apply(pd.forest, root, bits);
        REQUIRE(left.first >= 0);
        REQUIRE(right.first >= 0);
        CHECK(left.first == pd.alpha(right.first));
        CHECK(left.second == right.second);
      }
    }
  }
}

TEST_CASE("leaf_location finds the root and address of a leaf") {
  CHECK(leaf_location(Forest::trivial(3), 1) == std::pair<int, Address>(1, ""));
  CHECK(leaf_location(split_at(2, 0), 2) == std::pair<int, Address>(1, ""));
  Forest f = Forest::single(Tree::from_leaves({"00", "01", "1"}));
  CHECK(leaf_location(f, 1) == std::pair<int, Address>(0, "01"));
  CHECK(testutil::thrown_errc([&] { leaf_location(f, 3); }) == Errc::index_out_of_range);
}

TEST_CASE("block_permutation expands points to blocks") {
  // two blocks of sizes 1 and 2 swapped
  Permutation p = block_permutation(Permutation({1, 0}), {1, 2});
  CHECK(p == Permutation({2, 0, 1}));
  CHECK(block_permutation(Permutation::identity(3), {2, 1, 2}).is_identity());
}
