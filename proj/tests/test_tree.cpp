#include "treecol/tree.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace treecol;
using namespace treecol::testing;

TEST_SUITE_BEGIN("tree");

TEST_CASE("parse accepts edge lists") {
    Tree t = parse_tree("2\n0 1\n");
    CHECK(t.n() == 2);
    CHECK(t.edges().size() == 1);

    Tree p4 = parse_tree("4\n0 1\n1 2\n2 3\n");
    CHECK(tree_diameter(p4) == 3);
    CHECK(canonical_code(p4) == canonical_code(path(4)));
}

TEST_CASE("parse rejects bad input") {
    CHECK_THROWS_AS(parse_tree("4\n0 1\n2 3\n"), NotATree); // disconnected
    CHECK_THROWS_AS(parse_tree("3\n0 1\n1 2\n0 2\n"), NotATree); // too many edges
    CHECK_THROWS_AS(parse_tree("2\n0 5\n"), BadVertexId);
    CHECK_THROWS_AS(parse_tree("2\n0 zebra\n"), ParseError);
    CHECK_THROWS_AS(parse_tree("2\ngarbage\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_tree("2\n0 1 9\n"), ParseError); // trailing token
    CHECK_THROWS_AS(parse_tree(""), ParseError);
    CHECK(parse_tree("2\n\n0 1\n# comment\n").n() == 2);
    CHECK_THROWS_AS(parse_tree("2\n0 0\n"), NotATree); // self-loop, and wrong count
    CHECK_THROWS_AS(parse_tree("3\n0 1\n0 1\n"), NotATree); // duplicate edge
}

TEST_CASE("edge list round trip") {
    Tree t = double_star(3, 2);
    Tree back = parse_tree(t.to_edge_list());
    CHECK(back.edges() == t.edges());
}

TEST_CASE("family generators") {
    CHECK(path(1).n() == 1);
    CHECK(path(5).edges().size() == 4);
    CHECK_THROWS_AS(path(0), InvalidParameter);

    Tree s6 = star(6);
    CHECK(s6.degree(0) == 5);
    for (int v = 1; v < 6; ++v) CHECK(s6.degree(v) == 1);

    Tree ds = double_star(7, 2);
    CHECK(ds.n() == 11);
    std::multiset<int> degrees;
    for (int v = 0; v < ds.n(); ++v) degrees.insert(ds.degree(v));
    CHECK(degrees.count(8) == 1);
    CHECK(degrees.count(3) == 1);
    CHECK(degrees.count(1) == 9);
    CHECK_THROWS_AS(double_star(0, 3), InvalidParameter);
}

TEST_CASE("tree diameter") {
    CHECK(tree_diameter(path(6)) == 5);
    CHECK(tree_diameter(double_star(2, 2)) == 3);
    CHECK(tree_diameter(star(5)) == 2);
    CHECK(tree_diameter(path(1)) == 0);
}

TEST_CASE("leaf profiles") {
    Tree t = fan_out_tree();
    LeafProfile p = leaf_profile(t, 0);
    CHECK(p.n2 == 3);
    CHECK(p.n_ge4 == 3);
    CHECK(p.dist[0] == 0);

    Tree s = star(9);
    LeafProfile sp = leaf_profile(s, 3);
    CHECK(sp.n2 == 7); // every other leaf
    CHECK(sp.n_ge4 == 0);

    LeafProfile pp = leaf_profile(path(10), 0);
    CHECK(pp.n2 == 1);
    CHECK(pp.n_ge4 == 6);

    CHECK_THROWS_AS(leaf_profile(s, 0), NotALeaf); // center
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 8; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            CanonicalCode code = canonical_code(t);
            for (int trial = 0; trial < 100; ++trial) {
                CHECK(canonical_code(random_relabeled(t, rng)) == code);
            }
        }
    }
}

TEST_CASE("canonical code separates non-isomorphic trees") {
    CHECK(canonical_code(star(4)) != canonical_code(path(4)));
    // All pairs of enumerated representatives, against the brute-force check.
    for (int n = 4; n <= 7; ++n) {
        auto trees = enumerate_trees(n);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            for (std::size_t j = i + 1; j < trees.size(); ++j) {
                CHECK(canonical_code(trees[i]) != canonical_code(trees[j]));
                CHECK_FALSE(brute_force_isomorphic(trees[i], trees[j]));
            }
        }
    }
}

TEST_CASE("all labeled trees on five vertices give three codes") {
    // 5^3 Pruefer sequences, one tree each, three isomorphism classes.
    auto codes = pruefer_code_set(5);
    CHECK(codes.size() == 3);
}

TEST_CASE("enumeration counts match the known sequence") {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        for (const Tree& t : trees) {
            CHECK(t.n() == n);
            CHECK(static_cast<int>(t.edges().size()) == n - 1);
        }
        // Output is sorted by code.
        std::vector<CanonicalCode> codes;
        for (const Tree& t : trees) codes.push_back(canonical_code(t));
        CHECK(std::is_sorted(codes.begin(), codes.end()));
    }
    CHECK_THROWS_AS(enumerate_trees(kEnumerationLimit + 1), LimitExceeded);
    CHECK_THROWS_AS(enumerate_trees(0), InvalidParameter);
}

TEST_CASE("enumeration agrees with the pruefer oracle") {
    for (int n = 1; n <= 8; ++n) {
        auto oracle = pruefer_code_set(n);
        std::set<CanonicalCode> ours;
        for (const Tree& t : enumerate_trees(n)) ours.insert(canonical_code(t));
        CHECK(ours == oracle);
    }
}

TEST_CASE("pruefer decoding produces the documented tree") {
    // Sequence (3,3,3,4) on 6 vertices: 0,1,2 hang off 3, 3-4, 4-5.
    Tree t = tree_from_pruefer({3, 3, 3, 4});
    CHECK(t.degree(3) == 4);
    CHECK(t.degree(4) == 2);
    CHECK(canonical_code(t) == canonical_code(double_star(3, 1)));
}

TEST_CASE("centers") {
    CHECK(path(5).centers() == std::vector<int>{2});
    CHECK(path(6).centers() == std::vector<int>{2, 3});
    CHECK(star(7).centers() == std::vector<int>{0});
}

TEST_SUITE_END();
