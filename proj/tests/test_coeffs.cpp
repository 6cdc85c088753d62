#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csf/coeffs.hpp"
#include "csf/enumerate.hpp"
#include "csf/tree.hpp"
#include "support/oracles.hpp"

using namespace csf;

TEST_CASE("4-star coefficient map, both engines") {
    Tree star = parse_tree_text("0 1\n0 2\n0 3\n");
    for (const CoeffMap& c : {coeffs_naive(star), coeffs_dp(star)}) {
        CHECK(c.order() == 4);
        CHECK(c.at(Partition{4}) == 1);
        CHECK(c.at(Partition{3, 1}) == 3);
        CHECK(c.at(Partition{2, 2}) == 0);
        CHECK(c.at(Partition{2, 1, 1}) == 3);
        CHECK(c.at(Partition{1, 1, 1, 1}) == 1);
        CHECK(render_power_sum_polynomial(c) == "p_1^4-3p_1^2p_2+3p_1p_3-p_4");
    }
}

TEST_CASE("4-path coefficient map") {
    CoeffMap c = coeffs_dp(parse_tree_text("0 1\n1 2\n2 3\n"));
    CHECK(c.at(Partition{4}) == 1);
    CHECK(c.at(Partition{3, 1}) == 2);
    CHECK(c.at(Partition{2, 2}) == 1);
    CHECK(c.at(Partition{2, 1, 1}) == 3);
    CHECK(c.at(Partition{1, 1, 1, 1}) == 1);
}

TEST_CASE("tiny orders") {
    CoeffMap c1 = coeffs_dp(Tree::single_vertex());
    CHECK(c1.at(Partition{1}) == 1);
    CHECK(render_power_sum_polynomial(c1) == "p_1");
    CoeffMap c2 = coeffs_dp(parse_tree_text("0 1\n"));
    CHECK(render_power_sum_polynomial(c2) == "p_1^2-p_2");
}

TEST_CASE("dp equals naive for every tree through order 9") {
    for (int d = 1; d <= 9; ++d) {
        for (const Tree& t : all_trees(d)) {
            CoeffMap a = coeffs_naive(t);
            CoeffMap b = coeffs_dp(t);
            CHECK(a == b);
            a.validate();
        }
    }
}

TEST_CASE("dp equals naive on random trees up to order 16") {
    std::mt19937_64 rng(20240816);
    for (int i = 0; i < 40; ++i) {
        int d = 10 + static_cast<int>(rng() % 7);
        Tree t = oracles::random_tree(rng, d);
        CHECK(coeffs_naive(t) == coeffs_dp(t));
    }
}

TEST_CASE("reduced-subscript lookup") {
    Tree path6 = parse_tree_text("0 1\n1 2\n2 3\n3 4\n4 5\n");
    CoeffMap c = coeffs_dp(path6);
    CHECK(c.lookup({}) == 1);                       // the empty cut
    CHECK(c.lookup({1}) == c.at(Partition{5, 1}));  // c_1
    CHECK(c.lookup({2, 1}) == c.at(Partition{3, 2, 1}));
    CHECK_THROWS_AS(c.lookup({6}), WeightTooLargeError);
    CHECK_THROWS_AS(c.lookup({3, 3}), WeightTooLargeError);
}

TEST_CASE("row sums follow the cut-count binomials") {
    // the number of (l-1)-cuts of a tree of order d is C(d-1, l-1)
    Tree t = build_spider(parse_spider_spec("1,2,2;3"));
    CoeffMap c = coeffs_dp(t);
    int d = t.order();
    std::vector<Count> by_length(static_cast<std::size_t>(d + 1), 0);
    for (const auto& [part, count] : c.entries()) {
        by_length[static_cast<std::size_t>(part.length())] += count;
    }
    for (int l = 1; l <= d; ++l) {
        CHECK(by_length[static_cast<std::size_t>(l)] ==
              binomial(static_cast<Count>(d - 1), static_cast<Count>(l - 1)));
    }
}

TEST_CASE("engine guards") {
    CHECK_THROWS_AS(coeffs_dp(parse_tree_text("0 1\n1 2\n2 3\n"), 3),
                    OrderTooLargeError);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < 23; ++v) edges.emplace_back(v - 1, v);
    CHECK_THROWS_AS(coeffs_naive(Tree::from_edges(23, edges)), OrderTooLargeError);
}

TEST_CASE("json round-trip and validation") {
    CoeffMap c = coeffs_dp(build_spider(parse_spider_spec("1,1;4,4")));
    CoeffMap back = CoeffMap::from_json_text(c.to_json());
    CHECK(back == c);

    CHECK_THROWS_AS(CoeffMap::from_json_text("not json"), FormatError);
    CHECK_THROWS_AS(CoeffMap::from_json_text("{\"d\":2}"), FormatError);
    // weight mismatch: a partition of 3 in a d=2 map
    CHECK_THROWS_AS(CoeffMap::from_json_text(
                        "{\"d\":2,\"entries\":[{\"partition\":[2,1],\"count\":\"1\"}]}"),
                    FormatError);
    // duplicate keys
    CHECK_THROWS_AS(
        CoeffMap::from_json_text("{\"d\":2,\"entries\":["
                                 "{\"partition\":[2],\"count\":\"1\"},"
                                 "{\"partition\":[2],\"count\":\"1\"}]}"),
        FormatError);
    // counts beyond 64 bits
    CHECK_THROWS_AS(
        CoeffMap::from_json_text("{\"d\":2,\"entries\":[{\"partition\":[2],"
                                 "\"count\":\"18446744073709551616\"}]}"),
        OverflowError);
    CHECK_THROWS_AS(CoeffMap::from_json_text("{\"d\":65,\"entries\":[]}"),
                    OrderTooLargeError);
}

TEST_CASE("rooted cut profile of the 3-path rooted at a leaf") {
    auto [side, other] = split_at_edge(parse_tree_text("0 1\n1 2\n2 3\n"), 3, 2);
    // other = {2,1,0} rooted at 2, i.e. the 3-path rooted at a leaf
    CutProfile p = rooted_cut_profile(other);
    CHECK(p.at(Partition{}) == 1);
    CHECK(p.at(Partition{1}) == 1);
    CHECK(p.at(Partition{2}) == 1);
    CHECK(p.at(Partition{1, 1}) == 1);
    CHECK(p.size() == 4);
}

TEST_CASE("dp handles orders past the naive ceiling") {
    // caterpillar of order 26: spine of 13, one leaf per spine vertex
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < 13; ++v) edges.emplace_back(v - 1, v);
    for (int v = 0; v < 13; ++v) edges.emplace_back(v, 13 + v);
    Tree t = Tree::from_edges(26, edges);
    CoeffMap c = coeffs_dp(t);
    c.validate();
    CHECK(c.lookup({1}) == 13);  // one hung leaf per spine vertex
}