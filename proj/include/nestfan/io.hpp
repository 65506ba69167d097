#pragma once

#include "nestfan/design.hpp"
#include "nestfan/polytope.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace nestfan {

using Json = nlohmann::ordered_json;

// {"vertices":[labels],"edges":[[a,b],...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
// Family shorthand ("path:5", "cycle:4+path:2", ...) or a graph JSON file path.
Graph load_graph(const std::string& spec);

// List of tubes, each a sorted list of labels.
Json tube_to_json(const Graph& g, const Tube& t);
Json tubing_to_json(const Graph& g, const Tubing& t);
Tube tube_from_json(const Graph& g, const Json& j);
// Throws InputError unless the tubes are proper and pairwise compatible.
Tubing tubing_from_json(const Graph& g, const Json& j);

// {"round":[labels]} or {"square":"label"}.
Json design_tube_to_json(const Graph& g, const DesignTube& t);
DesignTube design_tube_from_json(const Graph& g, const Json& j);
Json design_tubing_to_json(const Graph& g, const DesignTubing& t);
DesignTubing design_tubing_from_json(const Graph& g, const Json& j);

// Integers stay JSON numbers when they fit, everything else becomes "p/q".
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"dimension","rays":{key:[...]},"cones":[[keys]],"provenance":{...}}
Json fan_to_json(const Fan& f, const Json& provenance = Json::object());
Fan fan_from_json(const Json& j);

// One facet per line, "a1 ... an <= b".
std::string h_rep_text(const Polytope& p);
// One vertex per line, coordinates separated by spaces.
std::string v_rep_text(const Polytope& p);
Json polytope_to_json(const Polytope& p);

Json read_json_file(const std::string& path);
// A path to an existing file, or inline JSON text.
Json read_json_argument(const std::string& arg);
void write_text_file(const std::string& path, const std::string& text);

using Point2 = std::array<double, 2>;

// Rays normalized to the unit sphere and projected from the pole onto the plane
// through the origin orthogonal to it. Throws InputError("ray at pole").
std::vector<Point2> stereographic_project(const std::vector<RatVector>& rays, const RatVector& pole);

struct PlotSpec {
    RatVector pole{-1, -1, -1};
    int size = 600;
    bool labels = true;
};

struct Plot {
    std::string svg;
    std::vector<Point2> points;       // projected rays, fan ray order
    int outer_cone = -1;              // the cone containing the pole
    double jitter = 0.0;              // pole perturbation used, 0 when none
};

// SVG 1.1 drawing of a 3-dimensional fan; cones are straight-edged triangles.
Plot plot_fan(const Fan& f, const PlotSpec& spec = {});

}  // namespace nestfan
