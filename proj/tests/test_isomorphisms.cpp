#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <sstream>

using namespace nestfan;
using nestfan::testing::tube;

namespace {

// "[j,k]" or "[j]" for the interval of labels j..k.
Tube interval(const Graph& path, const std::string& text) {
    std::string body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    int j = std::stoi(body.substr(0, comma));
    int k = comma == std::string::npos ? j : std::stoi(body.substr(comma + 1));
    Tube t = path.empty_set();
    for (int v = j; v <= k; ++v) t.insert(v - 1);
    return t;
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("graph automorphisms") {
    CHECK(graph_automorphisms(parse_family("path:4")).size() == 2);
    CHECK(graph_automorphisms(parse_family("cycle:4")).size() == 8);
    CHECK(graph_automorphisms(parse_family("star:4")).size() == 6);
}

TEST_CASE("orbit counts") {
    CHECK(tubing_orbit_count(parse_family("complete:3")) == 1);
    CHECK(tubing_orbit_count(parse_family("complete:4")) == 1);
    CHECK(tubing_orbit_count(parse_family("cycle:4")) == 3);
    CHECK(tubing_orbit_count(parse_family("path:4")) == 7);
    // Triangulations up to the dihedral group: hexagon 3, heptagon 4.
    CHECK(path_dihedral_orbit_count(3) == 3);
    CHECK(path_dihedral_orbit_count(4) == 4);
    CHECK(path_dihedral_orbit_count(1) == 1);
}

TEST_CASE("connected size partition") {
    CHECK(connected_size_partition(parse_family("path:3+path:2")) == std::vector<int>{3, 2});
    CHECK(connected_size_partition(parse_family("complete:4")) == std::vector<int>{4});
    CHECK(connected_size_partition(Graph({"1", "2", "3"}, {})) == std::vector<int>{1, 1, 1});
}

TEST_CASE("rotation table for n = 5") {
    Graph p6 = parse_family("path:6");
    auto from = split("[1] [2] [3] [4] [5] [6] [1,2] [2,3] [3,4] [4,5] [5,6] [1,3] [2,4] [3,5] [4,6] [1,4] [2,5] [3,6] [1,5] [2,6]");
    auto to = split("[2,6] [1] [2] [3] [4] [5] [3,6] [1,2] [2,3] [3,4] [4,5] [4,6] [1,3] [2,4] [3,5] [5,6] [1,4] [2,5] [6] [1,5]");
    REQUIRE(from.size() == to.size());
    for (std::size_t i = 0; i < from.size(); ++i)
        CHECK_MESSAGE(path_rotation(p6, 1, interval(p6, from[i])) == interval(p6, to[i]), from[i]);
}

TEST_CASE("rotation has order n + 3 and preserves compatibility") {
    for (int n = 1; n <= 5; ++n) {
        Graph p = make_family(Family::path, {n + 1});
        auto tubes = enumerate_tubes(p);
        for (const auto& t : tubes) {
            CHECK(path_rotation(p, n + 3, t) == t);
            if (n >= 2) CHECK(path_rotation(p, 1, t) != t);
            CHECK(path_reversal(p, path_reversal(p, t)) == t);
        }
        for (const auto& a : tubes)
            for (const auto& b : tubes)
                CHECK(are_compatible(p, a, b) == are_compatible(p, path_rotation(p, 1, a), path_rotation(p, 1, b)));
    }
}

TEST_CASE("spider involution") {
    Graph k4 = make_family(Family::spider, {0, 0, 0, 0});
    for (const auto& t : enumerate_tubes(k4)) CHECK(spider_omega(k4, t) == k4.all() - t);

    Graph s3 = make_family(Family::spider, {3});
    auto p = presentation_from_labels(s3);
    REQUIRE(p);
    Tube leg = s3.empty_set();
    leg.insert(p->legs[0][2]);
    leg.insert(p->legs[0][3]);
    Tube image = s3.empty_set();
    image.insert(p->legs[0][1]);
    image.insert(p->legs[0][2]);
    CHECK(spider_omega(s3, *p, leg) == image);

    Graph s02 = make_family(Family::spider, {0, 2});
    for (const auto& t : enumerate_tubes(s02)) CHECK(spider_omega(s02, spider_omega(s02, t)) == t);
}

TEST_CASE("spider involution dualizes degree and the compatibility fan") {
    for (const char* spec : {"spider:1,1", "spider:0,2", "spider:2,1,0", "spider:3", "complete:4", "spider:1,1,1"}) {
        Graph g = parse_family(spec);
        auto ps = spider_presentations(g);
        REQUIRE_FALSE(ps.empty());
        auto tubes = enumerate_tubes(g);
        for (const auto& p : ps)
            for (const auto& a : tubes)
                for (const auto& b : tubes)
                    CHECK(degree(g, spider_omega(g, p, a), spider_omega(g, p, b)) == degree(g, b, a));
        ComplexData data = complex_data(g);
        auto tubings = nestfan::testing::cone_tubings(data);
        for (std::size_t i = 0; i < tubings.size(); i += 3) {
            std::string why;
            CHECK_MESSAGE(spider_dual_is_primal(g, ps.front(), data, tubings[i], &why), why);
        }
    }
}

TEST_CASE("spider recognition") {
    CHECK(spider_presentations(parse_family("cycle:5")).empty());
    CHECK_FALSE(spider_presentations(parse_family("path:4")).empty());
    CHECK(parse_leg_label("v^2_3") == std::make_pair(2, 3));
    CHECK_FALSE(parse_leg_label("x"));
}

TEST_CASE("graph catalog") {
    std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        auto gs = connected_graph_catalog(n);
        CHECK(gs.size() == expected[static_cast<std::size_t>(n - 1)]);
        for (const auto& g : gs) CHECK(connected_components(g).size() == 1);
    }
}

TEST_CASE("collinear primal and dual vectors only on octopuses") {
    for (const auto& g : nestfan::testing::connected_graphs(2, 4)) {
        ComplexData data = complex_data(g);
        for (const auto& t : nestfan::testing::cone_tubings(data)) {
            if (!primal_dual_collinear(g, t)) continue;
            bool octopus = false;
            for (int h = 0; h < static_cast<int>(g.num_vertices()); ++h) octopus = octopus || is_octopus_with_head(g, h);
            CHECK(octopus);
        }
    }
    CHECK(is_octopus_with_head(parse_family("star:5"), 0));
    CHECK_FALSE(is_octopus_with_head(parse_family("cycle:4"), 0));
}
