#pragma once

#include "nestfan/nested.hpp"

#include <vector>

namespace nestfan {

enum class Mode { primal, dual };

// (t‖t'): -1 if equal, 0 if t ⊆ t', else the number of neighbors of t in t' \ t.
int degree(const Graph& g, const Tube& t, const Tube& t_prime);

using CompatVector = std::vector<int>;
// Rows indexed by initial tubes, columns by the tubes of a tubing.
using CompatMatrix = std::vector<std::vector<int>>;

// Primal: [(t°_i‖t)]_i. Dual: [(t‖t°_i)]_i. Coordinates follow the order of `initial`.
CompatVector compat_vector(const Graph& g, const Tubing& initial, const Tube& t, Mode mode);
CompatMatrix compat_matrix(const Graph& g, const Tubing& initial, const Tubing& t, Mode mode);

// Round tube (any tube, components allowed) or square tube |v|.
struct DesignTube {
    bool square = false;
    VertexSet round;
    int vertex = -1;

    static DesignTube make_round(VertexSet s) { return {false, std::move(s), -1}; }
    static DesignTube make_square(int v) { return {true, VertexSet(), v}; }

    bool operator==(const DesignTube& o) const;
    bool operator!=(const DesignTube& o) const { return !(*this == o); }
    // Squares first by vertex, then rounds in canonical tube order.
    bool operator<(const DesignTube& o) const;
    std::size_t hash() const;
};

struct DesignTubeHash {
    std::size_t operator()(const DesignTube& t) const { return t.hash(); }
};

using DesignTubing = std::vector<DesignTube>;

std::string design_tube_to_string(const Graph& g, const DesignTube& t);
// A square |v| counts as the singleton {v}.
bool design_nested(const DesignTube& a, const DesignTube& b);
bool design_compatible(const Graph& g, const DesignTube& a, const DesignTube& b);
int design_degree(const Graph& g, const DesignTube& a, const DesignTube& b);
CompatVector design_compat_vector(const Graph& g, const DesignTubing& initial, const DesignTube& t, Mode mode);

}  // namespace nestfan
