#pragma once

#include "nestfan/compat.hpp"
#include "nestfan/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nestfan {

enum class FanKind { primal, dual, design_primal, design_dual, nested, product, custom };

std::string to_string(FanKind k);
FanKind fan_kind_from_string(const std::string& s);

struct Fan {
    int dimension = 0;
    FanKind kind = FanKind::custom;
    std::vector<std::string> vertex_labels;
    std::vector<std::string> coordinate_keys;
    std::vector<std::string> ray_keys;
    std::vector<RatVector> rays;
    std::vector<std::vector<int>> cones;  // sorted ray indices
    std::optional<int> base_cone;         // the initial cone for compatibility fans
    std::vector<VertexSet> supports;      // tube of each ray, when rays are tubes

    int ray_index(const std::string& key) const;
    int cone_index(const std::vector<int>& sorted_rays) const;
};

struct FlipRecord {
    int cone_a = -1, cone_b = -1;
    int leaving = -1, entering = -1;  // ray indices: leaving ∈ cone_a, entering ∈ cone_b
    std::vector<int> rays;            // shared rays, then leaving, then entering
    IntVector coeffs;                 // aligned with rays; leaving coefficient positive
    bool rank_deficient = false;
    bool pivot_zero = false;
    bool separating = false;
    std::optional<bool> local;        // support inside leaving ∪ entering (tube fans)

    Int coefficient(int ray) const;
};

struct FanReport {
    bool ok = false;
    bool basis_cone_ok = false;
    bool disjointness_ok = false;
    bool structural_condition1 = false;
    bool pseudomanifold_ok = false;
    bool distinct_rays_ok = false;
    bool cones_nonsingular = false;
    std::vector<FlipRecord> flips;
    std::vector<std::string> problems;
};

// Tubes and maximal tubings of a graph, shared by all fans built on it.
struct ComplexData {
    std::vector<Tube> tubes;
    std::vector<std::vector<int>> cones;
    int tube_index(const Tube& t) const;
};

ComplexData complex_data(const Graph& g);

Fan build_fan(const Graph& g, const Tubing& initial, Mode mode);
Fan build_fan(const Graph& g, const ComplexData& data, const Tubing& initial, Mode mode);
Fan build_nested_fan(const Graph& g);
Fan build_nested_fan(const Graph& g, const ComplexData& data);

// Rays restricted to `dimension` coordinates on which projection is injective on their span.
RatMatrix working_rays(const Fan& f);

FanReport verify_fan(const Fan& f, int jobs = 1);
FlipRecord flip_dependence(const Fan& f, const std::vector<int>& cone, int ray);

Fan product_fan(const std::vector<Fan>& fans);

// Same dimension, coordinate keys, ray keys with equal vectors up to coordinate
// permutation, and same cones as key sets.
bool fans_equal(const Fan& a, const Fan& b, std::string* why = nullptr);
Fan relabel(const Fan& f, const std::function<std::string(const std::string&)>& ray_map,
            const std::function<std::string(const std::string&)>& coordinate_map);

bool hyperplane_restriction_check(const Graph& g, const Tubing& initial, const Tube& t0, Mode mode = Mode::primal);

}  // namespace nestfan
