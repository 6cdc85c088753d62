#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "csf/enumerate.hpp"
#include "csf/tree.hpp"
#include "support/oracles.hpp"

using namespace csf;

TEST_CASE("parse accepts comments, blank lines, and unordered labels") {
    Tree t = parse_tree_text("# a 4-star\n\n2 0\n0 1\n0 3   # hub is 0\n");
    CHECK(t.order() == 4);
    CHECK(t.degree(0) == 3);
    CHECK(t.leaf_count() == 3);
    CHECK(serialize_tree(t) == "0 1\n0 2\n0 3\n");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_tree_text(""), FormatError);
    CHECK_THROWS_AS(parse_tree_text("# only a comment\n"), FormatError);
    CHECK_THROWS_AS(parse_tree_text("0 1 2\n"), FormatError);
    CHECK_THROWS_AS(parse_tree_text("0 x\n"), FormatError);
    CHECK_THROWS_AS(parse_tree_text("0 -1\n"), BadLabelError);
    CHECK_THROWS_AS(parse_tree_text("0 16777216\n"), BadLabelError);
    // label 3 is skipped: vertices are required to be 0..d-1 with no gaps
    CHECK_THROWS_AS(parse_tree_text("0 1\n0 2\n4 1\n"), BadLabelError);
    CHECK_THROWS_AS(parse_tree_text("0 1\n1 2\n2 0\n"), NotATreeError);
    CHECK_THROWS_AS(parse_tree_text("0 1\n2 3\n"), NotATreeError);
    CHECK_THROWS_AS(parse_tree_text("0 1\n0 1\n"), NotATreeError);
    CHECK_THROWS_AS(parse_tree_text("0 0\n"), NotATreeError);
}

TEST_CASE("from_edges validates the tree invariants") {
    CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}}), NotATreeError);
    CHECK_THROWS_AS(Tree::from_edges(2, {{0, 2}}), BadLabelError);
    CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}, {0, 1}}), NotATreeError);
    // right edge count but a cycle plus an isolated vertex
    CHECK_THROWS_AS(Tree::from_edges(4, {{0, 1}, {1, 2}, {0, 2}}), NotATreeError);
    CHECK(Tree::single_vertex().order() == 1);
    CHECK(Tree::single_vertex().leaf_count() == 0);
    CHECK(serialize_tree(Tree::single_vertex()).empty());
}

TEST_CASE("serialize/parse round-trips every tree of order 2..8") {
    for (int d = 2; d <= 8; ++d) {
        for (const Tree& t : all_trees(d)) {
            Tree back = parse_tree_text(serialize_tree(t));
            CHECK(back.order() == t.order());
            CHECK(back.edges() == t.edges());
        }
    }
}

TEST_CASE("canonical code is a complete isomorphism invariant at order 6") {
    std::vector<Tree> trees = all_trees(6);
    // relabeled copies keep their code
    std::mt19937_64 rng(7);
    for (const Tree& t : trees) {
        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(relabel(t, perm)) == canonical_code(t));
    }
    // equality of codes matches brute-force isomorphism on all pairs
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i + 1; j < trees.size(); ++j) {
            bool same_code = canonical_code(trees[i]) == canonical_code(trees[j]);
            CHECK(same_code == oracles::brute_isomorphic(trees[i], trees[j]));
        }
    }
}

TEST_CASE("rooted code separates roots of the same tree") {
    Tree path = parse_tree_text("0 1\n1 2\n2 3\n");
    CHECK(rooted_canonical_code(path, 0) == rooted_canonical_code(path, 3));
    CHECK(rooted_canonical_code(path, 0) != rooted_canonical_code(path, 1));
    RootedTree back = rooted_tree_from_code(rooted_canonical_code(path, 1));
    CHECK(back.root == 0);
    CHECK(rooted_canonical_code(back) == rooted_canonical_code(path, 1));
}

TEST_CASE("centroids") {
    CHECK(centroids(parse_tree_text("0 1\n1 2\n2 3\n")) == std::vector<int>{1, 2});
    CHECK(centroids(parse_tree_text("0 1\n0 2\n0 3\n")) == std::vector<int>{0});
    CHECK(centroids(Tree::single_vertex()) == std::vector<int>{0});
}

TEST_CASE("split_at_edge relabels both sides with root 0") {
    // caterpillar: 0-1-2-3 with 4 on 1, 5 on 2
    Tree t = parse_tree_text("0 1\n1 2\n2 3\n1 4\n2 5\n");
    auto [a, b] = split_at_edge(t, 1, 2);
    CHECK(a.tree.order() + b.tree.order() == 6);
    CHECK(a.root == 0);
    CHECK(b.root == 0);
    CHECK(a.tree.order() == 3);  // {1,0,4} side
    CHECK(rooted_canonical_code(a) == rooted_canonical_code(b));
    CHECK_THROWS_AS(split_at_edge(t, 0, 2), EdgeNotFoundError);
}

TEST_CASE("code round-trip and code-set stability at order 7") {
    for (const Tree& t : all_trees(7)) {
        CanonicalCode code = canonical_code(t);
        CHECK(canonical_code(tree_from_code(code)) == code);
    }
    CHECK_THROWS_AS(tree_from_code("(()"), FormatError);
    CHECK_THROWS_AS(tree_from_code("()()"), FormatError);
    CHECK_THROWS_AS(tree_from_code("(x)"), FormatError);
}
