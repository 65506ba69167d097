#pragma once

#include "nestfan/io.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nestfan::testing {

inline Tube tube(const Graph& g, const std::vector<std::string>& labels) { return g.set_of_labels(labels); }

inline Tubing tubing(const Graph& g, const std::vector<std::vector<std::string>>& tubes) {
    std::vector<Tube> out;
    for (const auto& t : tubes) out.push_back(tube(g, t));
    return make_tubing(out);
}

inline std::vector<Graph> connected_graphs(int lo, int hi) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n)
        for (auto& g : connected_graph_catalog(n)) out.push_back(std::move(g));
    return out;
}

inline std::vector<Tubing> cone_tubings(const ComplexData& data) {
    std::vector<Tubing> out;
    for (const auto& c : data.cones) {
        Tubing t;
        for (int i : c) t.push_back(data.tubes[static_cast<std::size_t>(i)]);
        out.push_back(make_tubing(t));
    }
    return out;
}

// Ordered pairs (t, t') related by a flip of some maximal tubing.
inline std::set<std::pair<Tube, Tube>> flip_pairs(const Graph& g) {
    std::set<std::pair<Tube, Tube>> out;
    for (const auto& tb : enumerate_maximal_tubings(g))
        for (const auto& t : tb) out.emplace(t, flip(g, tb, t).t_prime);
    return out;
}

}  // namespace nestfan::testing
