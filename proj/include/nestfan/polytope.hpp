#pragma once

#include "nestfan/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nestfan {

// {x : <normals[i], x> <= offsets[i]} together with one vertex per maximal cone.
struct Polytope {
    int dimension = 0;
    std::vector<std::string> facet_keys;
    std::vector<RatVector> normals;
    RatVector offsets;
    std::vector<RatVector> vertices;
    std::vector<std::vector<std::string>> vertex_tags;  // sorted facet keys of the cone
};

struct WeightSearch {
    enum class Outcome { feasible, infeasible, invalid_fan };
    Outcome outcome = Outcome::invalid_fan;
    RatVector weights;  // aligned with the fan's rays
};

std::string to_string(WeightSearch::Outcome o);

// α ω(s) + α' ω(s') + Σ β_r ω(r).
Rational flip_row_value(const FlipRecord& rec, const RatVector& weights);
bool weights_satisfy_flips(const FanReport& rep, const RatVector& weights);

// Minimal Σω subject to ω >= 1 and every flip row >= 1.
WeightSearch find_weights_lp(const Fan& f, const FanReport& rep);
WeightSearch find_weights_lp(const Fan& f);

// ω(t) = f(|t|) with f(k) = k(2m - k), m = |V| + 1; in dual cycle fans,
// tubes on |V| - 1 vertices get f/2;
// initial tubes get the smallest integer Ω that makes every flip row positive.
// Throws InputError unless g is a path or a cycle and f a compatibility fan of g.
std::optional<RatVector> path_cycle_weights(const Graph& g, const Fan& f, const FanReport& rep);

Polytope realize_polytope(const Fan& f, const RatVector& weights);
bool verify_normal_fan(const Polytope& p, const Fan& f, std::string* why = nullptr);

// The stellohedron for the star on n + 1 vertices and the leaf initial tubing.
Polytope star_polytope(int n);
// f(k) = (n + k)(n + 1 - k) / 2.
Int star_offset(int n, int k);
// Every n-subset of facets with a unique intersection point inside the polytope gives a vertex;
// compares the resulting point set with p.vertices.
bool star_double_description(const Polytope& p);

}  // namespace nestfan
