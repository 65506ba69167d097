#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <cmath>
#include <map>
#include <regex>
#include <set>

using namespace nestfan;
using nestfan::testing::tube;
using nestfan::testing::tubing;

namespace {

// Cells of a plotted fan, read back from the SVG, as sets of ray keys.
std::vector<std::set<std::string>> svg_cells(const std::string& svg) {
    std::vector<std::set<std::string>> out;
    std::regex re("<polygon class=\"cell[^\"]*\" data-rays=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        std::set<std::string> keys;
        std::string s = (*it)[1];
        std::size_t pos = 0;
        while (true) {
            std::size_t next = s.find(';', pos);
            keys.insert(s.substr(pos, next - pos));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        out.push_back(keys);
    }
    return out;
}

}  // namespace

TEST_CASE("graph JSON round trip") {
    Graph g = parse_family("spider:0,2,1");
    Graph h = graph_from_json(Json::parse(graph_to_json(g).dump()));
    CHECK(h == g);
    Graph k = graph_from_json(Json::parse(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})"));
    CHECK(k.num_vertices() == 3);
    CHECK(k.adjacent(0, 1));
    CHECK_FALSE(k.adjacent(0, 2));
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["a"],"edges":[["a","z"]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["a"]})")), InputError);
}

TEST_CASE("tubing JSON") {
    Graph p3 = parse_family("path:3");
    Tubing t = tubing(p3, {{"1"}, {"1", "2"}});
    Json j = tubing_to_json(p3, t);
    CHECK(j.dump() == R"([["1"],["1","2"]])");
    CHECK(tubing_from_json(p3, j) == t);
    CHECK_THROWS_AS(tubing_from_json(p3, Json::parse(R"([["1","3"]])")), InputError);
    CHECK_THROWS_AS(tubing_from_json(p3, Json::parse(R"([["1"],["2"]])")), InputError);
    CHECK_THROWS_AS(tubing_from_json(p3, Json::parse(R"([["1","2","3"]])")), InputError);
    CHECK_THROWS_AS(tubing_from_json(p3, Json::parse(R"({"a":1})")), InputError);
}

TEST_CASE("design tube JSON") {
    Graph p2 = parse_family("path:2");
    DesignTube s = DesignTube::make_square(0);
    DesignTube r = DesignTube::make_round(p2.all());
    CHECK(design_tube_to_json(p2, s).dump() == R"({"square":"1"})");
    CHECK(design_tube_to_json(p2, r).dump() == R"({"round":["1","2"]})");
    CHECK(design_tube_from_json(p2, design_tube_to_json(p2, r)) == r);
    DesignTubing all = all_squares_tubing(p2);
    CHECK(design_tubing_from_json(p2, design_tubing_to_json(p2, all)) == all);
    CHECK_THROWS_AS(design_tube_from_json(p2, Json::parse(R"({"oval":"1"})")), InputError);
}

TEST_CASE("exact rationals in JSON") {
    CHECK(rational_to_json(Rational(3)).dump() == "3");
    CHECK(rational_to_json(Rational(-2, 3)).dump() == "\"-2/3\"");
    CHECK(rational_from_json(Json("4/6")) == Rational(2, 3));
    CHECK(rational_from_json(Json(7)) == 7);
    CHECK_THROWS_AS(rational_from_json(Json("x")), InputError);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
}

TEST_CASE("fan JSON round trip") {
    for (const char* spec : {"path:4", "cycle:4", "path:3+path:2"}) {
        Graph g = parse_family(spec);
        for (Mode m : {Mode::primal, Mode::dual}) {
            Fan f = build_fan(g, greedy_maximal_tubing(g), m);
            Fan h = fan_from_json(Json::parse(fan_to_json(f).dump()));
            CHECK(fans_equal(f, h));
            CHECK(h.base_cone == f.base_cone);
            CHECK(h.supports == f.supports);
            CHECK(verify_fan(h).ok);
        }
    }
    Graph p3 = parse_family("path:3");
    Fan n = build_nested_fan(p3);
    Json j = fan_to_json(n);
    CHECK(j["rays"]["{1}"][0] == "2/3");
    CHECK(fans_equal(fan_from_json(j), n));
    CHECK_THROWS_AS(fan_from_json(Json::parse(R"({"dimension":1,"rays":{"a":[1]},"cones":[["b"]]})")), InputError);
}

TEST_CASE("polytope output") {
    Polytope p = star_polytope(2);
    std::string h = h_rep_text(p);
    CHECK(h.find("<= ") != std::string::npos);
    std::size_t lines = 0;
    for (char c : h) lines += c == '\n';
    CHECK(lines == p.normals.size());
    std::string v = v_rep_text(p);
    CHECK(v.find("0 0\n") != std::string::npos);
    Json j = polytope_to_json(p);
    CHECK(j["vertices"].size() == 5);
    CHECK(j["vertices"][0].contains("tubing"));
}

TEST_CASE("stereographic projection") {
    CHECK_THROWS_WITH_AS(stereographic_project({{-1, -1, -1}}, {-1, -1, -1}), "ray at pole", InputError);
    auto o = stereographic_project({{1, 1, 1}}, {-1, -1, -1});
    CHECK(std::hypot(o[0][0], o[0][1]) < 1e-12);
    auto q = stereographic_project({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {-1, -1, -1});
    double r0 = std::hypot(q[0][0], q[0][1]);
    for (const auto& x : q) CHECK(std::fabs(std::hypot(x[0], x[1]) - r0) < 1e-9);
}

TEST_CASE("plots of 3-dimensional fans") {
    Graph p4 = parse_family("path:4");
    Fan f = build_fan(p4, greedy_maximal_tubing(p4), Mode::primal);
    Plot p = plot_fan(f);
    CHECK(p.points.size() == 9);
    CHECK(p.outer_cone == *f.base_cone);
    auto cells = svg_cells(p.svg);
    CHECK(cells.size() == 14);
    CHECK(p.svg.find("<metadata>") != std::string::npos);

    for (const char* spec : {"cycle:4", "star:4", "complete:4"}) {
        Graph g = parse_family(spec);
        Fan h = build_fan(g, greedy_maximal_tubing(g), Mode::dual);
        Plot q = plot_fan(h);
        CHECK(q.outer_cone == *h.base_cone);
        auto cs = svg_cells(q.svg);
        REQUIRE(cs.size() == h.cones.size());
        // Cells sharing two rays are exactly the flips of maximal tubings.
        std::map<std::set<std::string>, Tubing> by_keys;
        for (const auto& tb : enumerate_maximal_tubings(g)) {
            std::set<std::string> keys;
            for (const auto& t : tb) keys.insert(set_to_string(g, t));
            by_keys[keys] = tb;
        }
        std::size_t adjacent = 0, flips = 0;
        for (std::size_t a = 0; a < cs.size(); ++a) {
            REQUIRE(by_keys.count(cs[a]));
            for (std::size_t b = a + 1; b < cs.size(); ++b) {
                std::size_t common = 0;
                for (const auto& k : cs[a]) common += cs[b].count(k);
                adjacent += common == 2;
            }
            flips += by_keys[cs[a]].size();
        }
        CHECK(2 * adjacent == flips);
    }
    CHECK_THROWS_AS(plot_fan(build_fan(parse_family("path:3"), greedy_maximal_tubing(parse_family("path:3")), Mode::primal)),
                    InputError);
}

TEST_CASE("pole on a cone boundary is jittered") {
    Graph c4 = parse_family("cycle:4");
    Fan f = build_fan(c4, greedy_maximal_tubing(c4), Mode::primal);
    PlotSpec spec;
    spec.pole = {-1, -1, 0};
    Plot p = plot_fan(f, spec);
    CHECK(p.jitter == doctest::Approx(1e-9));
    CHECK(p.outer_cone >= 0);
    CHECK(p.svg.find("jitter=1e-09") != std::string::npos);
}
