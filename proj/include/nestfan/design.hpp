#pragma once

#include "nestfan/fan.hpp"
#include "nestfan/isomorphisms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nestfan {

// Squares first, then all round tubes including the components.
std::vector<DesignTube> enumerate_design_tubes(const Graph& g);
DesignTubing make_design_tubing(std::vector<DesignTube> tubes);
std::string design_tubing_to_string(const Graph& g, const DesignTubing& t);
bool is_design_tubing(const Graph& g, const DesignTubing& t);
// Maximal design tubings have exactly |V| tubes.
bool is_maximal_design_tubing(const Graph& g, const DesignTubing& t);
DesignTubing all_squares_tubing(const Graph& g);

struct DesignComplexData {
    std::vector<DesignTube> tubes;
    std::vector<std::vector<int>> cones;
    int tube_index(const DesignTube& t) const;
};

// Maximal design tubings by clique search in the compatibility graph.
DesignComplexData design_complex_data(const Graph& g);
std::vector<DesignTubing> enumerate_maximal_design_tubings(const Graph& g);

struct DesignFlipResult {
    DesignTube x_prime;
    DesignTubing tubing;
};

// The unique design tube completing T \ {x} to another maximal design tubing.
DesignFlipResult design_flip(const Graph& g, const DesignTubing& t, const DesignTube& x);

Fan build_design_fan(const Graph& g, const DesignTubing& initial, Mode mode);
Fan build_design_fan(const Graph& g, const DesignComplexData& data, const DesignTubing& initial, Mode mode);
// Rays -e_v for |v| and the characteristic vector of each round tube; coordinates keyed "|v|".
Fan build_design_nested_fan(const Graph& g);

// Σ coeffs[i] · dᵛ(tubes[i]) = 0, primitive, with a positive coefficient on t.
struct DesignDependence {
    std::vector<DesignTube> tubes;
    IntVector coeffs;
    Int coefficient(const DesignTube& x) const;
};

// Dependence among dual design compatibility vectors for the square flip |v| ↔ t,
// following the forced tubes |w_i| (neighbors of t) and a_j (components of t \ {v}).
// In the case z° != v, w_1..w_r are the neighbors of t in t° not adjacent to a_1.
// When |v| is initial its coefficient is 1, fixed by the |v| coordinate. nullopt when t is initial.
std::optional<DesignDependence> design_square_flip_dependence(const Graph& g, const DesignTubing& initial,
                                                              const Tube& t, int v);
// Σ coeffs · dᵛ evaluated coordinatewise; zero iff the dependence holds.
bool design_dependence_holds(const Graph& g, const DesignTubing& initial, const DesignDependence& d);

// ω(t) = 3^{|V|}|t| - 3^{|t|} on round tubes and ω(|v|) = C, the smallest positive
// integer making every flip row of the all-squares design fan positive.
std::optional<RatVector> design_nested_weights(const Graph& g, const Fan& f, const FanReport& rep);

// Π: design tubes of P_n to tubes of P_{n+1}; |v| ↦ {v+1, ..., n+1}, round t ↦ t.
Tube design_pi(const Graph& path, const DesignTube& x);

// Octopus with the same leg lengths as the spider presentation; "*" first.
Graph octopus_for(const SpiderPresentation& p);
// Ω̄: design tubes of a spider to tubes of octopus_for(p).
Tube design_omega_bar(const Graph& spider, const SpiderPresentation& p, const DesignTube& x);

struct OctopusPresentation {
    int head = -1;
    std::vector<std::vector<int>> legs;  // legs[i][j] = v^{i+1}_j, legs[i][0] adjacent to the head
};

// Reads the labels "*" and v^i_j produced by make_family(octopus, ...).
std::optional<OctopusPresentation> octopus_from_labels(const Graph& g);
// Ω^design: involutive automorphism of the design nested complex of an octopus.
DesignTube design_omega(const Graph& octopus, const OctopusPresentation& p, const DesignTube& x);

}  // namespace nestfan
