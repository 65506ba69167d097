#pragma once

#include "nestfan/graph.hpp"

#include <optional>
#include <vector>

namespace nestfan {

// Canonically sorted set of proper tubes.
using Tubing = std::vector<Tube>;

struct TubingHash {
    std::size_t operator()(const Tubing& t) const;
};

Tubing make_tubing(std::vector<Tube> tubes);
std::string tubing_to_string(const Graph& g, const Tubing& t);

bool are_compatible(const Graph& g, const Tube& a, const Tube& b);
bool is_tubing(const Graph& g, const Tubing& t);
bool is_maximal_tubing(const Graph& g, const Tubing& t);

// Proper tubes in canonical order; with include_improper the components are appended.
std::vector<Tube> enumerate_tubes(const Graph& g, bool include_improper = false);
// All tubings (including the empty one), optionally restricted to a given size.
std::vector<Tubing> enumerate_tubings(const Graph& g, std::optional<int> size = std::nullopt);
// Maximal tubings by traversal of the flip graph from a greedy seed.
std::vector<Tubing> enumerate_maximal_tubings(const Graph& g);
// Maximal tubings by filtering all tubings; reference implementation for small graphs.
std::vector<Tubing> enumerate_maximal_tubings_by_filter(const Graph& g);
Tubing greedy_maximal_tubing(const Graph& g);

struct Spine {
    std::vector<Tube> nodes;       // tubes of T followed by the components of G
    std::vector<int> parent;       // index of the minimal strictly containing node, or -1
    std::vector<VertexSet> lambda; // λ(t, T)
    int index_of(const Tube& t) const;
    // Unique root of a node; requires a singleton λ-set.
    int root(int node) const;
};

Spine lambda_roots(const Graph& g, const Tubing& t);

struct FlipResult {
    Tube t_prime;
    Tubing tubing;
};

FlipResult flip(const Graph& g, const Tubing& t, const Tube& tube);

struct FlipContext {
    Tube t, t_prime;
    Tube t_bar;
    std::vector<Tube> t_under_parts;
    std::vector<Tube> a_parts, a_prime_parts;
    int r = -1, r_prime = -1;
    bool t_bar_proper = false;
    std::vector<Tube> forced;  // canonical order
};

std::optional<FlipContext> exchange_data(const Graph& g, const Tube& t, const Tube& t_prime);

// Image of s in the link of t0, as a tube of link_graph(g, t0) on the same vertex indices.
Tube link_split(const Graph& g, const Tube& t0, const Tube& s);

}  // namespace nestfan
