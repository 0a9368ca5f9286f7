#include "treecol/walk.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace treecol;
using namespace treecol::testing;

namespace {

void check_geodesic(const Tree& t, const Coloring& f, const Coloring& g) {
    Labeling h = balance(lift(t, f, g));
    Walk walk = build_walk(t, f, h);
    CHECK(walk.length() == static_cast<std::size_t>(norm1(h)));
    WalkReport report = validate_walk(t, walk);
    CHECK(report.valid);
    CHECK(report.end == g);
    CHECK(report.monotone);
    CHECK_FALSE(report.has_opposite_edges);
    for (int v = 0; v < t.n(); ++v) {
        int expected = h.labels[v];
        CHECK(report.up_toggles[v] == std::max(expected, 0));
        CHECK(report.down_toggles[v] == std::max(-expected, 0));
    }
}

} // namespace

TEST_SUITE_BEGIN("walk");

TEST_CASE("zero labeling gives the empty walk") {
    Tree t = path(3);
    Coloring f = Coloring::from_string("010");
    Walk w = build_walk(t, f, Labeling{{0, 0, 0}});
    CHECK(w.length() == 0);
    WalkReport report = validate_walk(t, w);
    CHECK(report.valid);
    CHECK(report.end == f);
}

TEST_CASE("two-vertex walk with unequal toggle counts") {
    Tree p2 = path(2);
    Coloring f = Coloring::from_string("01");
    Walk w = build_walk(p2, f, Labeling{{1, 2}});
    CHECK(w.length() == 3);
    WalkReport report = validate_walk(p2, w);
    CHECK(report.valid);
    CHECK(report.end.to_string() == "10");
    CHECK(report.up_toggles == std::vector<int>{1, 2});
    CHECK(report.down_toggles == std::vector<int>{0, 0});
    // The lone leaf toggle comes first: it flips the color gap so the
    // following pairs stay proper.
    CHECK(w.steps.front() == WalkStep{1, +1});
}

TEST_CASE("build_walk rejects bad inputs") {
    Tree p2 = path(2);
    CHECK_THROWS_AS(build_walk(p2, Coloring::from_string("01"), Labeling{{0, 2}}),
                    IncompatibleLabeling);
    // Edge-valid labeling whose implied endpoint collides on the edge.
    CHECK_THROWS_AS(build_walk(p2, Coloring::from_string("01"), Labeling{{0, -1}}),
                    ImproperColoring);
    CHECK_THROWS_AS(build_walk(p2, Coloring::from_string("00"), Labeling{{0, 0}}),
                    ImproperColoring);
}

TEST_CASE("sequential path labeling walks to distance 13 on seven vertices") {
    Tree p7 = path(7);
    Labeling h{{-2, -1, 0, 1, 2, 3, 4}};
    auto [f, g] = realize(p7, h);
    Walk walk = build_walk(p7, f, h);
    CHECK(walk.length() == 13);
    WalkReport report = validate_walk(p7, walk);
    CHECK(report.valid);
    CHECK(report.end == g);
    CHECK(bfs_distance(p7, f, g) == 13);
}

TEST_CASE("validate_walk flags opposite edges") {
    Tree p3 = path(3);
    Walk w;
    w.start = Coloring::from_string("010");
    w.steps = {{0, -1}, {0, +1}}; // 010 -> 210 -> 010, proper but not monotone
    WalkReport report = validate_walk(p3, w);
    CHECK(report.valid);
    CHECK(report.has_opposite_edges);
    CHECK_FALSE(report.monotone);
    CHECK(report.end == w.start);
}

TEST_CASE("validate_walk reports the first improper step") {
    Tree p2 = path(2);
    Walk w;
    w.start = Coloring::from_string("01");
    w.steps = {{0, -1}, {1, +1}, {0, +1}};
    // 01 -> 21 -> 22 is improper at index 1.
    WalkReport report = validate_walk(p2, w);
    CHECK_FALSE(report.valid);
    CHECK(report.first_invalid_step == 1);
}

TEST_CASE("opposite toggles on a free vertex are flagged but proper") {
    Walk w;
    w.start = Coloring::from_string("0");
    w.steps = {{0, +1}, {0, -1}};
    WalkReport report = validate_walk(path(1), w);
    CHECK(report.valid);
    CHECK(report.has_opposite_edges);
    CHECK_FALSE(report.monotone);
    CHECK(report.end.to_string() == "0");
}

TEST_CASE("walk serialization round trip") {
    Tree t = star(4);
    Coloring f = Coloring::from_string("0111");
    Coloring g = Coloring::from_string("2111");
    Walk w = build_walk(t, f, balance(lift(t, f, g)));
    Walk back = Walk::deserialize(w.serialize());
    CHECK(back.start == w.start);
    CHECK(back.steps == w.steps);
    CHECK_THROWS_AS(Walk::deserialize("01\n0 +2\n"), ParseError);
}

TEST_CASE("random geodesics replay cleanly") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        Tree t = random_tree(1 + trial % 9, rng);
        check_geodesic(t, random_coloring(t, rng), random_coloring(t, rng));
    }
}

TEST_CASE("walks realize the graph distance on every small pair") {
    for (int n = 2; n <= 7; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            ColoringSpace space(t);
            std::vector<Coloring> colorings;
            for (std::size_t i = 0; i < space.size(); ++i) colorings.push_back(space.coloring(i));
            long long mismatches = 0;
            for (std::size_t i = 0; i < colorings.size(); ++i) {
                auto dist = space.bfs_from(i);
                for (std::size_t j = 0; j < colorings.size(); ++j) {
                    Labeling h = balance(lift(t, colorings[i], colorings[j]));
                    Walk walk = build_walk(t, colorings[i], h);
                    if (walk.length() != static_cast<std::size_t>(dist[j])) ++mismatches;
                }
            }
            CHECK(mismatches == 0);
        }
    }
}

TEST_SUITE_END();
