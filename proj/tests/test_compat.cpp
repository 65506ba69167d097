#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace nestfan;
using nestfan::testing::tube;
using nestfan::testing::tubing;

TEST_CASE("compatibility degree") {
    Graph k3 = parse_family("complete:3");
    CHECK(degree(k3, tube(k3, {"1"}), tube(k3, {"2", "3"})) == 2);
    CHECK(degree(k3, tube(k3, {"2", "3"}), tube(k3, {"1"})) == 1);
    Graph p3 = parse_family("path:3");
    CHECK(degree(p3, tube(p3, {"1", "2"}), tube(p3, {"2", "3"})) == 1);
    CHECK(degree(p3, tube(p3, {"2", "3"}), tube(p3, {"1", "2"})) == 1);
    Graph k4 = parse_family("complete:4");
    CHECK(degree(k4, tube(k4, {"1"}), tube(k4, {"2", "3"})) == 2);
    CHECK(degree(k4, tube(k4, {"1"}), tube(k4, {"1"})) == -1);
}

TEST_CASE("compatibility vectors") {
    Graph s4 = parse_family("star:4");
    Tubing leaves = tubing(s4, {{"l1"}, {"l2"}, {"l3"}});
    CHECK(compat_vector(s4, leaves, tube(s4, {"*", "l1"}), Mode::primal) == CompatVector{0, 1, 1});

    Graph k3 = parse_family("complete:3");
    Tubing t0 = tubing(k3, {{"1"}, {"1", "2"}});
    CHECK(compat_vector(k3, t0, tube(k3, {"2", "3"}), Mode::primal) == CompatVector{2, 1});

    for (const auto& g : nestfan::testing::connected_graphs(2, 5)) {
        Tubing init = greedy_maximal_tubing(g);
        for (Mode m : {Mode::primal, Mode::dual})
            for (std::size_t i = 0; i < init.size(); ++i) {
                CompatVector e(init.size(), 0);
                e[i] = -1;
                CHECK(compat_vector(g, init, init[i], m) == e);
            }
    }
}

TEST_CASE("design degree") {
    Graph p2 = parse_family("path:2");
    DesignTube sq1 = DesignTube::make_square(0), sq2 = DesignTube::make_square(1);
    DesignTube r12 = DesignTube::make_round(p2.all()), r2 = DesignTube::make_round(tube(p2, {"2"}));
    CHECK(design_degree(p2, sq1, r12) == 1);
    CHECK(design_degree(p2, r12, sq1) == 1);
    CHECK(design_degree(p2, sq1, sq2) == 0);
    CHECK(design_degree(p2, sq1, r2) == 0);
    CHECK(design_degree(p2, sq1, sq1) == -1);

    CHECK_FALSE(design_compatible(p2, sq1, r12));
    CHECK(design_compatible(p2, sq1, sq2));
    CHECK(design_compatible(p2, DesignTube::make_round(tube(p2, {"1"})), r12));
}

TEST_CASE("degree trichotomy against the flip oracle") {
    for (const auto& g : nestfan::testing::connected_graphs(1, 5)) {
        auto pairs = nestfan::testing::flip_pairs(g);
        auto tubes = enumerate_tubes(g);
        for (const auto& a : tubes)
            for (const auto& b : tubes) {
                int ab = degree(g, a, b), ba = degree(g, b, a);
                if (a == b) {
                    CHECK(ab == -1);
                    continue;
                }
                CHECK(ab >= 0);
                CHECK((ab == 0 && ba == 0) == are_compatible(g, a, b));
                CHECK((ab == 1 && ba == 1) == (pairs.count({a, b}) == 1));
            }
    }
}

TEST_CASE("design degree trichotomy against design flips") {
    for (const auto& g : nestfan::testing::connected_graphs(1, 4)) {
        std::set<std::pair<DesignTube, DesignTube>> pairs;
        for (const auto& tb : enumerate_maximal_design_tubings(g))
            for (const auto& x : tb) pairs.emplace(x, design_flip(g, tb, x).x_prime);
        auto tubes = enumerate_design_tubes(g);
        for (const auto& a : tubes)
            for (const auto& b : tubes) {
                int ab = design_degree(g, a, b), ba = design_degree(g, b, a);
                if (a == b) {
                    CHECK(ab == -1);
                    continue;
                }
                CHECK((ab == 0 && ba == 0) == design_compatible(g, a, b));
                CHECK((ab == 1 && ba == 1) == (pairs.count({a, b}) == 1));
            }
    }
}
