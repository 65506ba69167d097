#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <algorithm>
#include <set>

using namespace nestfan;
using nestfan::testing::tube;
using nestfan::testing::tubing;

namespace {

Fan star_leaf_fan(int n) {
    Graph g = make_family(Family::star, {n + 1});
    std::vector<Tube> leaves;
    for (int i = 1; i <= n; ++i) leaves.push_back(g.set_of({i}));
    return build_fan(g, make_tubing(leaves), Mode::primal);
}

}  // namespace

TEST_CASE("LP weights realize the triangle fan as a hexagon") {
    Graph k3 = parse_family("complete:3");
    Fan f = build_fan(k3, tubing(k3, {{"1"}, {"1", "2"}}), Mode::primal);
    FanReport rep = verify_fan(f);
    WeightSearch w = find_weights_lp(f, rep);
    REQUIRE(w.outcome == WeightSearch::Outcome::feasible);
    CHECK(weights_satisfy_flips(rep, w.weights));
    Polytope p = realize_polytope(f, w.weights);
    CHECK(p.vertices.size() == 6);
    CHECK(verify_normal_fan(p, f));
}

TEST_CASE("star fan weight system is feasible") {
    Fan f = star_leaf_fan(3);
    CHECK(find_weights_lp(f).outcome == WeightSearch::Outcome::feasible);
}

TEST_CASE("weights below a flip bound are rejected") {
    Graph p4 = parse_family("path:4");
    Fan f = build_fan(p4, greedy_maximal_tubing(p4), Mode::primal);
    FanReport rep = verify_fan(f);
    WeightSearch w = find_weights_lp(f, rep);
    REQUIRE(w.outcome == WeightSearch::Outcome::feasible);
    CHECK(verify_normal_fan(realize_polytope(f, w.weights), f));
    const FlipRecord& rec = rep.flips.front();
    RatVector bad = w.weights;
    Rational value = flip_row_value(rec, bad);
    Rational alpha = rec.coefficient(rec.leaving);
    bad[static_cast<std::size_t>(rec.leaving)] -= (value + 1) / alpha;
    CHECK(sgn(flip_row_value(rec, bad)) < 0);
    CHECK_FALSE(weights_satisfy_flips(rep, bad));
    CHECK_FALSE(verify_normal_fan(realize_polytope(f, bad), f));
}

TEST_CASE("nested fans are polytopal") {
    for (const auto& g : nestfan::testing::connected_graphs(2, 4)) {
        Fan f = build_nested_fan(g);
        WeightSearch w = find_weights_lp(f);
        REQUIRE(w.outcome == WeightSearch::Outcome::feasible);
        CHECK(verify_normal_fan(realize_polytope(f, w.weights), f));
    }
}

TEST_CASE("path and cycle weights") {
    for (const char* spec : {"path:3", "path:4", "cycle:4", "path:5", "cycle:5"}) {
        Graph g = parse_family(spec);
        ComplexData data = complex_data(g);
        for (const auto& t : nestfan::testing::cone_tubings(data))
            for (Mode m : {Mode::primal, Mode::dual}) {
                Fan f = build_fan(g, data, t, m);
                FanReport rep = verify_fan(f);
                auto w = path_cycle_weights(g, f, rep);
                REQUIRE(w);
                CHECK(weights_satisfy_flips(rep, *w));
                CHECK(verify_normal_fan(realize_polytope(f, *w), f));
            }
    }
    Graph s = parse_family("star:4");
    Fan f = build_fan(s, greedy_maximal_tubing(s), Mode::primal);
    CHECK_THROWS_AS(path_cycle_weights(s, f, verify_fan(f)), InputError);
}

TEST_CASE("stellohedron") {
    Polytope p2 = star_polytope(2);
    std::set<RatVector> got(p2.vertices.begin(), p2.vertices.end());
    std::set<RatVector> pentagon{{1, 2}, {2, 1}, {0, 2}, {2, 0}, {0, 0}};
    CHECK(got == pentagon);
    CHECK(verify_normal_fan(p2, star_leaf_fan(2)));
    CHECK(star_double_description(p2));

    Polytope p3 = star_polytope(3);
    CHECK(p3.vertices.size() == 16);
    CHECK(verify_normal_fan(p3, star_leaf_fan(3)));
    CHECK(star_double_description(p3));
    CHECK(star_offset(3, 1) == 6);
    CHECK(star_offset(3, 3) == 3);
}

TEST_CASE("stellohedron from the fan with concave weights") {
    const int n = 3;
    Fan f = star_leaf_fan(n);
    Polytope direct = star_polytope(n);
    RatVector w(f.rays.size());
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        bool leaf = std::find(f.cones[static_cast<std::size_t>(*f.base_cone)].begin(),
                              f.cones[static_cast<std::size_t>(*f.base_cone)].end(),
                              static_cast<int>(r)) != f.cones[static_cast<std::size_t>(*f.base_cone)].end();
        w[r] = leaf ? Rational(0) : Rational(star_offset(n, static_cast<int>(f.supports[r].size())));
    }
    Polytope p = realize_polytope(f, w);
    std::set<RatVector> a(p.vertices.begin(), p.vertices.end()), b(direct.vertices.begin(), direct.vertices.end());
    CHECK(a == b);
}

TEST_CASE("design nested weights") {
    for (const char* spec : {"path:2", "path:3", "complete:3", "star:4"}) {
        Graph g = parse_family(spec);
        Fan f = build_design_fan(g, all_squares_tubing(g), Mode::primal);
        FanReport rep = verify_fan(f);
        REQUIRE(rep.ok);
        auto w = design_nested_weights(g, f, rep);
        REQUIRE(w);
        CHECK(verify_normal_fan(realize_polytope(f, *w), f));
    }
}
