#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "csf/enumerate.hpp"
#include "csf/tree.hpp"
#include "support/oracles.hpp"

using namespace csf;

TEST_CASE("free tree counts match the known sequence") {
    // number of unlabeled trees on d vertices, d = 1..12
    const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int d = 1; d <= 12; ++d) {
        CHECK(all_trees(d).size() == expected[d - 1]);
    }
}

TEST_CASE("rooted tree counts match the known sequence") {
    // number of rooted unlabeled trees on n vertices, n = 1..9
    const std::size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286};
    for (int n = 1; n <= 9; ++n) {
        CHECK(all_rooted_trees(n).size() == expected[n - 1]);
    }
}

TEST_CASE("generated free classes are exactly the Pruefer-dedup classes") {
    for (int d = 1; d <= 8; ++d) {
        std::set<CanonicalCode> got;
        for (const Tree& t : all_trees(d)) {
            CHECK(t.order() == d);
            CHECK(got.insert(canonical_code(t)).second);  // no repeats
        }
        CHECK(got == oracles::pruefer_free_codes(d));
    }
}

TEST_CASE("generated rooted classes are exactly the root-everywhere classes") {
    for (int n = 1; n <= 7; ++n) {
        std::set<CanonicalCode> got;
        for (const RootedTree& r : all_rooted_trees(n)) {
            CHECK(r.root == 0);
            CHECK(got.insert(rooted_canonical_code(r)).second);
        }
        CHECK(got == oracles::rooted_codes_by_rooting(n));
    }
}

TEST_CASE("order guard") {
    CHECK_THROWS_AS(all_trees(0), OrderTooLargeError);
    CHECK_THROWS_AS(all_trees(kDefaultEnumMaxOrder + 1), OrderTooLargeError);
    CHECK_THROWS_AS(FreeTreeGenerator(23), OrderTooLargeError);
}

TEST_CASE("named rooted classes") {
    CHECK(build_R(1, 1).tree.order() == 1);
    // R_{n,1} is the path rooted at a leaf
    RootedTree r41 = build_R(4, 1);
    CHECK(r41.tree.order() == 4);
    CHECK(r41.tree.degree(r41.root) == 1);
    CHECK(r41.tree.leaf_count() == 2);
    // R_{n,2} trades path length for a fork one step before the far end
    RootedTree r42 = build_R(4, 2);
    CHECK(r42.tree.order() == 4);
    CHECK(r42.tree.leaf_count() == 3);
    CHECK(rooted_canonical_code(r41) != rooted_canonical_code(r42));
    // R_{3,2} is the 3-path rooted at its middle vertex
    RootedTree r32 = build_R(3, 2);
    CHECK(r32.tree.degree(r32.root) == 2);
    CHECK_THROWS_AS(build_R(2, 2), InvalidClassError);
    CHECK_THROWS_AS(build_R(3, 3), InvalidClassError);
    CHECK_THROWS_AS(build_R(0, 1), InvalidClassError);
}

TEST_CASE("spider specs: validation, build, parse, format") {
    CHECK(parse_spider_spec("1,1;4,4") == SpiderSpec{Partition{1, 1}, Partition{4, 4}});
    CHECK(format_spider_spec(parse_spider_spec("5,2,1;")) == "1,2,5;");
    CHECK(format_spider_spec(parse_spider_spec(";3,3,4")) == ";3,3,4");
    CHECK_THROWS_AS(parse_spider_spec("1,1,1"), InvalidSpecError);
    CHECK_THROWS_AS(parse_spider_spec("1;2;3"), InvalidSpecError);
    CHECK_THROWS_AS(parse_spider_spec("1,x;3"), InvalidSpecError);
    CHECK_THROWS_AS(parse_spider_spec("0,1,1;"), InvalidSpecError);
    // mu parts below 3 or fewer than 3 legs fail validation
    CHECK_THROWS_AS(validate_spider_spec(SpiderSpec{Partition{1, 1}, Partition{2}}),
                    InvalidSpecError);
    CHECK_THROWS_AS(validate_spider_spec(SpiderSpec{Partition{1, 1}, {}}),
                    InvalidSpecError);

    // (1,1,1;) is the 4-star
    Tree star = build_spider(parse_spider_spec("1,1,1;"));
    CHECK(canonical_code(star) == canonical_code(parse_tree_text("0 1\n0 2\n0 3\n")));

    // a 2-leg of order q contributes q vertices and 2 leaves
    Tree s = build_spider(parse_spider_spec("1,2;4"));
    CHECK(s.order() == 8);
    CHECK(s.leaf_count() == 4);
    CHECK(s.degree(0) == 3);
}

TEST_CASE("all_two_spiders enumerates each signature once") {
    CHECK(all_two_spiders(4).size() == 1);
    CHECK(all_two_spiders(5).size() == 2);
    CHECK(all_two_spiders(6).size() == 5);
    for (int d = 4; d <= 12; ++d) {
        std::set<SpiderSpec> seen;
        std::set<CanonicalCode> codes;
        for (const SpiderSpec& s : all_two_spiders(d)) {
            CHECK(s.order() == d);
            CHECK(s.lambda.length() + s.mu.length() >= 3);
            CHECK(seen.insert(s).second);
            // distinct signatures build non-isomorphic trees
            CHECK(codes.insert(canonical_code(build_spider(s))).second);
        }
    }
}
