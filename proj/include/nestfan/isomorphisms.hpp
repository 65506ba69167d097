#pragma once

#include "nestfan/fan.hpp"

#include <optional>
#include <vector>

namespace nestfan {

// perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

std::vector<Permutation> graph_automorphisms(const Graph& g);
Tube apply_permutation(const Permutation& perm, const Tube& t);
Tubing apply_permutation(const Permutation& perm, const Tubing& t);

// Aut(G)-orbits on maximal tubings.
std::size_t tubing_orbit_count(const Graph& g);
// Orbits of maximal tubings of the path on n + 1 vertices under ⟨rot, rev⟩,
// i.e. triangulations of the (n+3)-gon up to the dihedral group.
std::size_t path_dihedral_orbit_count(int n);

// Component sizes, decreasing.
std::vector<int> connected_size_partition(const Graph& g);

// A clique body {legs[i][0]} with the path legs[i][0], legs[i][1], ... hanging from each body vertex.
struct SpiderPresentation {
    std::vector<std::vector<int>> legs;
    int leg_length(std::size_t i) const { return static_cast<int>(legs[i].size()) - 1; }
};

// Every way of reading g as a spider (several for paths).
std::vector<SpiderPresentation> spider_presentations(const Graph& g);
// (i, j) for a label "v^i_j", i >= 1, j >= 0.
std::optional<std::pair<int, int>> parse_leg_label(const std::string& label);
// Reads the labels v^i_j produced by make_family(spider, ...).
std::optional<SpiderPresentation> presentation_from_labels(const Graph& g);

Tube spider_omega(const Graph& g, const SpiderPresentation& p, const Tube& t);
// Uses the label presentation when present, otherwise the first recognized one.
Tube spider_omega(const Graph& g, const Tube& t);

// D*(G, T°) equals D(G, Ω(T°)) once the latter's rays and coordinates are renamed through Ω.
bool spider_dual_is_primal(const Graph& g, const SpiderPresentation& p, const ComplexData& data,
                           const Tubing& initial, std::string* why = nullptr);

// Path P_{n+1} with labels 1..n+1 in order; tubes are intervals [j, k].
Tube path_rotation(const Graph& path, int power, const Tube& t);
Tube path_reversal(const Graph& path, const Tube& t);

// One representative of each isomorphism class of connected graphs on n vertices, labels 1..n.
std::vector<Graph> connected_graph_catalog(int n);

// Every tube has collinear primal and dual compatibility vectors.
bool primal_dual_collinear(const Graph& g, const Tubing& initial);
// g minus the head is a union of paths, each attached to the head by one endpoint only.
bool is_octopus_with_head(const Graph& g, int head);

}  // namespace nestfan
