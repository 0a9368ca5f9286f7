#include "treecol/extremal.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace treecol;
using namespace treecol::testing;

TEST_SUITE_BEGIN("extremal");

TEST_CASE("path formula values") {
    CHECK(path_diameter_formula(1) == 1);
    CHECK(path_diameter_formula(2) == 3);
    CHECK(path_diameter_formula(6) == 11);
    CHECK(path_diameter_formula(7) == 13);
    CHECK(path_diameter_formula(8) == 18);
    CHECK(path_diameter_formula(9) == 21);
    CHECK(path_diameter_formula(10) == 27);
}

TEST_CASE("minimum formula values") {
    CHECK(min_diameter_formula(1) == 1);
    CHECK(min_diameter_formula(6) == 9);
    CHECK(min_diameter_formula(7) == 10);
    CHECK(min_diameter_formula(11) == 16);
}

TEST_CASE("sequential path labeling") {
    CHECK(sequential_path_labeling(7).labels == std::vector<int>{-2, -1, 0, 1, 2, 3, 4});
    CHECK(sequential_path_labeling(6).labels == std::vector<int>{-1, 0, 1, 2, 3, 4});
    CHECK(sequential_path_labeling(1).labels == std::vector<int>{1});
    for (int n = 1; n <= 12; ++n) {
        Labeling h = sequential_path_labeling(n);
        CHECK(is_labeling(path(n), h));
        CHECK(is_balanced(h));
        CHECK(norm1(h) == path_diameter_formula(n));
    }
}

TEST_CASE("two-level labeling is balanced with norm floor(3n/2)") {
    CHECK(two_level_labeling(path(4)).labels == std::vector<int>{1, 1, 2, 2});
    CHECK(norm1(two_level_labeling(path(5))) == 7);
    CHECK(norm1(two_level_labeling(star(9))) == 13);
    for (int n = 1; n <= 9; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            Labeling h = two_level_labeling(t);
            CHECK(is_labeling(t, h));
            CHECK(is_balanced(h));
            CHECK(norm1(h) == min_diameter_formula(n));
        }
    }
}

TEST_CASE("small-neighborhood labeling") {
    Labeling h = small_n2_labeling(path(10), 0);
    CHECK(is_labeling(path(10), h));
    CHECK(is_balanced(h));
    CHECK(norm1(h) == 16); // floor(30/2) + 1

    CHECK_THROWS_AS(small_n2_labeling(star(10), 1), HypothesisFailed);
    CHECK_THROWS_AS(small_n2_labeling(path(10), 5), NotALeaf);

    CHECK(norm1(small_n2_labeling(path(12), 0)) == 19);
    CHECK(is_balanced(small_n2_labeling(path(12), 0)));
}

TEST_CASE("large-neighborhood labeling reproduces the fan-out instance") {
    Tree t = fan_out_tree();
    Labeling h = large_n2_labeling(t, 0, 2);
    CHECK(h.labels == std::vector<int>{-1, 0, 1, 1, 1, 2, 2, 3, 3, 2});
    CHECK(is_labeling(t, h));
    CHECK(is_balanced(h));
    CHECK(norm1(h) == 16);

    CHECK_THROWS_AS(large_n2_labeling(t, 0, 3), HypothesisFailed);
    CHECK_THROWS_AS(large_n2_labeling(t, 0, 0), HypothesisFailed);
}

TEST_CASE("applicable constructions stay balanced at the bumped norm") {
    for (int n = 4; n <= 8; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            int ones = (n + 1) / 2 - 4;
            for (int v = 0; v < n; ++v) {
                if (!t.is_leaf(v)) continue;
                LeafProfile p = leaf_profile(t, v);
                if (p.n2 <= ones) {
                    Labeling h = small_n2_labeling(t, v);
                    CHECK(is_labeling(t, h));
                    CHECK(is_balanced(h));
                    CHECK(norm1(h) == min_diameter_formula(n) + 1);
                }
                int k = p.n2 - ones;
                if (k >= 1 && p.n_ge4 >= k) {
                    Labeling h = large_n2_labeling(t, v, k);
                    CHECK(is_labeling(t, h));
                    CHECK(is_balanced(h));
                    CHECK(norm1(h) == min_diameter_formula(n) + 1);
                }
            }
        }
    }
}

TEST_CASE("search matches the bfs oracle on all trees up to nine vertices") {
    for (int n = 1; n <= 9; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            DiameterResult r = max_balanced_labeling(t);
            CHECK(r.value == oracle_diameter(t, 2).value);
            CHECK(r.value >= min_diameter_formula(n));
            CHECK(is_balanced(r.witness));
            CHECK(norm1(r.witness) == r.value);
            REQUIRE(r.witness_pair.has_value());
            CHECK(labeling_distance(t, r.witness_pair->first, r.witness_pair->second) == r.value);
        }
    }
}

TEST_CASE("search witness for the six-path") {
    DiameterResult r = max_balanced_labeling(path(6));
    CHECK(r.value == 11);
    CHECK(PhiProfile(r.witness).median2() == 3); // median 3/2 after normalization
}

TEST_CASE("six-vertex diameters") {
    std::multiset<long long> values;
    for (const Tree& t : enumerate_trees(6)) values.insert(max_balanced_labeling(t).value);
    CHECK(values == std::multiset<long long>{9, 9, 9, 9, 10, 11});
}

TEST_CASE("maximizer medians stay within one of the allowed six values") {
    for (int n = 1; n <= 7; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            for (int med2 : maximizer_medians(t)) {
                CHECK((std::abs(med2) == 2 || std::abs(med2) == 3 || std::abs(med2) == 4));
            }
        }
    }
    auto p6 = maximizer_medians(path(6));
    CHECK(p6.count(3) == 1); // the sequential labeling's median
    auto p4 = maximizer_medians(path(4));
    CHECK(p4.count(3) == 1);
    CHECK(p4.count(-3) == 1); // its mirror image
}

TEST_CASE("double star recognizers") {
    CHECK_FALSE(is_nearly_symmetric_double_star(double_star(7, 2)));
    CHECK(is_nearly_symmetric_double_star(double_star(6, 3)));
    CHECK_FALSE(is_nearly_symmetric_double_star(star(8)));
    CHECK(double_star_arms(double_star(2, 5)) == std::pair(5, 2));
    CHECK(double_star_arms(path(4)) == std::pair(1, 1));
    CHECK_FALSE(double_star_arms(path(6)).has_value());
    CHECK(is_path(path(9)));
    CHECK_FALSE(is_path(star(4)));
    CHECK(is_star(star(4)));
    CHECK(is_star(path(3))); // K_{1,2}
    CHECK_FALSE(is_star(double_star(2, 2)));
}

TEST_CASE("near-symmetric double stars sit exactly on the floor") {
    // S(6,3) has 11 vertices; the closed form and the search both give 16.
    CHECK(min_diameter_formula(11) == 16);
    CHECK(max_balanced_labeling(double_star(6, 3)).value == 16);
    CHECK(max_balanced_labeling(double_star(4, 4)).value == min_diameter_formula(10));
}

TEST_CASE("lopsided double stars exceed the floor") {
    for (int n = 9; n <= 11; ++n) {
        for (int a = (n - 2 + 5 + 1) / 2; a <= n - 3; ++a) {
            int b = n - 2 - a;
            if (b < 1 || a - b < 5) continue;
            CHECK(max_balanced_labeling(double_star(a, b)).value >= min_diameter_formula(n) + 1);
        }
    }
}

TEST_CASE("classification sweeps") {
    ExtremalClassification c5 = classify_extremal(5);
    CHECK(c5.max_value == 7);
    CHECK(c5.min_value == 7);
    CHECK(c5.max_trees.size() == 3); // all trees tie

    ExtremalClassification c6 = classify_extremal(6);
    CHECK(c6.max_value == 11);
    CHECK(c6.max_trees == std::set<CanonicalCode>{canonical_code(path(6))});
    CHECK(c6.min_value == 9);
    // Star, both double stars, and the (3,2,2,1,1,1) tree with two long arms.
    Tree spider122(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(c6.min_trees == std::set<CanonicalCode>{
                              canonical_code(star(6)),
                              canonical_code(double_star(2, 2)),
                              canonical_code(double_star(3, 1)),
                              canonical_code(spider122),
                          });

    ExtremalClassification c7 = classify_extremal(7, 2);
    CHECK(c7.max_value == 13);
    CHECK(c7.max_trees == std::set<CanonicalCode>{canonical_code(path(7))});
    CHECK(c7.min_value == 10);
    CHECK(c7.min_trees == std::set<CanonicalCode>{
                              canonical_code(star(7)),
                              canonical_code(double_star(4, 1)),
                              canonical_code(double_star(3, 2)),
                          });
    CHECK_FALSE(check_extremal_claim(c7).has_value());
}

TEST_CASE("extremal claim checker notices damage") {
    ExtremalClassification c = classify_extremal(7);
    c.min_trees.erase(canonical_code(star(7)));
    CHECK(check_extremal_claim(c).has_value());
    ExtremalClassification c6 = classify_extremal(6);
    CHECK_THROWS_AS(check_extremal_claim(c6), InvalidParameter);
}

TEST_CASE("every deep tree admits one of the two bump constructions") {
    // Contrapositive coverage: graph diameter at least 4 forces a leaf whose
    // profile satisfies the small or the large hypothesis.
    for (int n = 7; n <= 9; ++n) {
        int ones = (n + 1) / 2 - 4;
        for (const Tree& t : enumerate_trees(n)) {
            if (tree_diameter(t) < 4) continue;
            bool covered = false;
            for (int v = 0; v < n && !covered; ++v) {
                if (!t.is_leaf(v)) continue;
                LeafProfile p = leaf_profile(t, v);
                if (p.n2 <= ones) covered = true;
                int k = p.n2 - ones;
                if (k >= 1 && p.n_ge4 >= k) covered = true;
            }
            CHECK(covered);
        }
    }
}

TEST_CASE("search rejects oversized trees") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < kSearchLimit + 2; ++i) edges.emplace_back(i - 1, i);
    Tree big(kSearchLimit + 2, std::move(edges));
    CHECK_THROWS_AS(max_balanced_labeling(big), LimitExceeded);
}

TEST_SUITE_END();
