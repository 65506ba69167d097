#include "nestfan/io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace nestfan {

namespace {

std::vector<std::string> label_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be a list of labels");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (x.is_string()) out.push_back(x.get<std::string>());
        else if (x.is_number_integer()) out.push_back(std::to_string(x.get<long long>()));
        else throw InputError(std::string(what) + ": labels must be strings");
    }
    return out;
}

std::string label_of(const Json& x) {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number_integer()) return std::to_string(x.get<long long>());
    throw InputError("vertex labels must be strings");
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Parses "{a,b,c}" over the given labels.
std::optional<VertexSet> parse_set_key(const std::string& key, const std::vector<std::string>& labels) {
    if (key.size() < 2 || key.front() != '{' || key.back() != '}') return std::nullopt;
    VertexSet s(labels.size());
    std::string body = key.substr(1, key.size() - 2);
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto it = std::find(labels.begin(), labels.end(), part);
        if (it == labels.end()) return std::nullopt;
        s.insert(static_cast<int>(it - labels.begin()));
    }
    if (s.empty()) return std::nullopt;
    return s;
}

std::array<double, 3> to_unit(const RatVector& v) {
    if (v.size() != 3) throw InputError("stereographic projection needs 3-dimensional vectors");
    std::array<double, 3> x{v[0].get_d(), v[1].get_d(), v[2].get_d()};
    double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (n == 0) throw InputError("zero vector cannot be projected");
    for (auto& c : x) c /= n;
    return x;
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<double, 3> normalized(std::array<double, 3> v) {
    double n = std::sqrt(dot(v, v));
    for (auto& c : v) c /= n;
    return v;
}

std::vector<Point2> project_unit(const std::vector<std::array<double, 3>>& xs, const std::array<double, 3>& p) {
    std::array<double, 3> seed = std::fabs(p[0]) < 0.9 ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
    double s = dot(seed, p);
    std::array<double, 3> e1 = normalized({seed[0] - s * p[0], seed[1] - s * p[1], seed[2] - s * p[2]});
    std::array<double, 3> e2 = cross(p, e1);
    std::vector<Point2> out;
    for (const auto& x : xs) {
        double xp = dot(x, p);
        double denom = 1.0 - xp;
        if (denom < 1e-12) throw InputError("ray at pole");
        std::array<double, 3> y{(x[0] - xp * p[0]) / denom, (x[1] - xp * p[1]) / denom, (x[2] - xp * p[2]) / denom};
        out.push_back({dot(y, e1), dot(y, e2)});
    }
    return out;
}

// Coefficients of target in the basis of three rays.
std::optional<RatVector> cone_coordinates(const std::vector<RatVector>& rays, const std::vector<int>& cone,
                                          const RatVector& target) {
    RatMatrix a(3, RatVector(3));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            rays[static_cast<std::size_t>(cone[static_cast<std::size_t>(k)])][static_cast<std::size_t>(i)];
    return solve_square(a, target);
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.labels();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON needs \"vertices\" and \"edges\"");
    std::vector<std::string> labels = label_list(j["vertices"], "vertices");
    std::vector<std::pair<int, int>> edges;
    auto index = [&](const Json& x) {
        std::string l = label_of(x);
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw InputError("edge mentions unknown vertex " + l);
        return static_cast<int>(it - labels.begin());
    };
    if (!j["edges"].is_array()) throw InputError("edges must be a list");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of labels");
        edges.emplace_back(index(e[0]), index(e[1]));
    }
    return Graph(std::move(labels), edges);
}

Graph load_graph(const std::string& spec) {
    if (std::filesystem::exists(spec)) return graph_from_json(read_json_file(spec));
    return parse_family(spec);
}

Json tube_to_json(const Graph& g, const Tube& t) { return set_labels(g, t); }

Json tubing_to_json(const Graph& g, const Tubing& t) {
    Json j = Json::array();
    for (const auto& tube : t) j.push_back(tube_to_json(g, tube));
    return j;
}

Tube tube_from_json(const Graph& g, const Json& j) {
    Tube t = g.set_of_labels(label_list(j, "tube"));
    if (!is_tube(g, t)) throw InputError("not a tube: " + j.dump());
    return t;
}

Tubing tubing_from_json(const Graph& g, const Json& j) {
    if (!j.is_array()) throw InputError("tubing must be a list of tubes");
    std::vector<Tube> tubes;
    for (const auto& x : j) {
        Tube t = tube_from_json(g, x);
        if (!is_proper_tube(g, t)) throw InputError("not a proper tube: " + x.dump());
        tubes.push_back(t);
    }
    Tubing out = make_tubing(tubes);
    if (out.size() != tubes.size()) throw InputError("repeated tube in tubing");
    if (!is_tubing(g, out)) throw InputError("tubes are not pairwise compatible");
    return out;
}

Json design_tube_to_json(const Graph& g, const DesignTube& t) {
    if (t.square) return Json{{"square", g.label(t.vertex)}};
    return Json{{"round", set_labels(g, t.round)}};
}

DesignTube design_tube_from_json(const Graph& g, const Json& j) {
    if (j.is_object() && j.size() == 1 && j.contains("square")) {
        int v = g.index_of(label_of(j["square"]));
        if (v < 0) throw InputError("unknown vertex in square tube");
        return DesignTube::make_square(v);
    }
    if (j.is_object() && j.size() == 1 && j.contains("round")) return DesignTube::make_round(tube_from_json(g, j["round"]));
    throw InputError("design tube must be {\"round\":[...]} or {\"square\":\"v\"}");
}

Json design_tubing_to_json(const Graph& g, const DesignTubing& t) {
    Json j = Json::array();
    for (const auto& x : t) j.push_back(design_tube_to_json(g, x));
    return j;
}

DesignTubing design_tubing_from_json(const Graph& g, const Json& j) {
    if (!j.is_array()) throw InputError("design tubing must be a list");
    std::vector<DesignTube> tubes;
    for (const auto& x : j) tubes.push_back(design_tube_from_json(g, x));
    DesignTubing out = make_design_tubing(tubes);
    if (out.size() != tubes.size()) throw InputError("repeated design tube");
    if (!is_design_tubing(g, out)) throw InputError("design tubes are not pairwise compatible");
    return out;
}

Json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Int(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        try {
            Rational q(j.get<std::string>());
            q.canonicalize();
            if (q.get_den() == 0) throw InputError("zero denominator");
            return q;
        } catch (const std::invalid_argument&) {
        }
    }
    throw InputError("not an exact rational: " + j.dump());
}

Json fan_to_json(const Fan& f, const Json& provenance) {
    Json j;
    j["dimension"] = f.dimension;
    Json rays = Json::object();
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        Json v = Json::array();
        for (const auto& x : f.rays[r]) v.push_back(rational_to_json(x));
        rays[f.ray_keys[r]] = v;
    }
    j["rays"] = rays;
    Json cones = Json::array();
    for (const auto& c : f.cones) {
        Json keys = Json::array();
        for (int r : c) keys.push_back(f.ray_keys[static_cast<std::size_t>(r)]);
        cones.push_back(keys);
    }
    j["cones"] = cones;
    Json prov = provenance;
    prov["kind"] = to_string(f.kind);
    prov["coordinates"] = f.coordinate_keys;
    if (!f.vertex_labels.empty()) prov["vertex_labels"] = f.vertex_labels;
    if (f.base_cone) {
        Json keys = Json::array();
        for (int r : f.cones[static_cast<std::size_t>(*f.base_cone)]) keys.push_back(f.ray_keys[static_cast<std::size_t>(r)]);
        prov["base_cone"] = keys;
    }
    j["provenance"] = prov;
    return j;
}

Fan fan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("rays") || !j.contains("cones"))
        throw InputError("fan JSON needs \"dimension\", \"rays\" and \"cones\"");
    Fan f;
    if (!j["dimension"].is_number_integer()) throw InputError("dimension must be an integer");
    f.dimension = j["dimension"].get<int>();
    if (!j["rays"].is_object()) throw InputError("rays must be an object keyed by tube");
    std::size_t width = 0;
    for (const auto& [key, v] : j["rays"].items()) {
        if (!v.is_array()) throw InputError("ray " + key + " must be a list");
        RatVector x;
        for (const auto& c : v) x.push_back(rational_from_json(c));
        if (f.rays.empty()) width = x.size();
        if (x.size() != width) throw InputError("rays have different lengths");
        f.ray_keys.push_back(key);
        f.rays.push_back(std::move(x));
    }
    if (!j["cones"].is_array()) throw InputError("cones must be a list");
    for (const auto& c : j["cones"]) {
        std::vector<int> cone;
        for (const auto& k : c) {
            int r = f.ray_index(label_of(k));
            if (r < 0) throw InputError("cone mentions unknown ray " + k.dump());
            cone.push_back(r);
        }
        std::sort(cone.begin(), cone.end());
        f.cones.push_back(cone);
    }
    Json prov = j.value("provenance", Json::object());
    f.kind = fan_kind_from_string(prov.value("kind", std::string("custom")));
    if (prov.contains("coordinates")) f.coordinate_keys = label_list(prov["coordinates"], "coordinates");
    else
        for (std::size_t i = 0; i < width; ++i) f.coordinate_keys.push_back("x" + std::to_string(i + 1));
    if (f.coordinate_keys.size() != width) throw InputError("coordinate keys do not match ray length");
    if (prov.contains("vertex_labels")) f.vertex_labels = label_list(prov["vertex_labels"], "vertex_labels");
    if (prov.contains("base_cone")) {
        std::vector<int> cone;
        for (const auto& k : prov["base_cone"]) cone.push_back(f.ray_index(label_of(k)));
        std::sort(cone.begin(), cone.end());
        int idx = f.cone_index(cone);
        if (idx < 0) throw InputError("base cone is not a cone of the fan");
        f.base_cone = idx;
    }
    if (!f.vertex_labels.empty() && (f.kind == FanKind::primal || f.kind == FanKind::dual || f.kind == FanKind::nested)) {
        for (const auto& key : f.ray_keys) {
            auto s = parse_set_key(key, f.vertex_labels);
            if (!s) {
                f.supports.clear();
                break;
            }
            f.supports.push_back(*s);
        }
    }
    return f;
}

std::string h_rep_text(const Polytope& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.normals.size(); ++i) {
        for (const auto& a : p.normals[i]) out << to_string(a) << ' ';
        out << "<= " << to_string(p.offsets[i]) << '\n';
    }
    return out.str();
}

std::string v_rep_text(const Polytope& p) {
    std::ostringstream out;
    for (const auto& v : p.vertices) {
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << to_string(v[k]);
        out << '\n';
    }
    return out.str();
}

Json polytope_to_json(const Polytope& p) {
    Json j;
    j["dimension"] = p.dimension;
    Json vertices = Json::array();
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        Json coords = Json::array();
        for (const auto& x : p.vertices[i]) coords.push_back(rational_to_json(x));
        Json v{{"coordinates", coords}};
        if (i < p.vertex_tags.size()) v["tubing"] = p.vertex_tags[i];
        vertices.push_back(v);
    }
    j["vertices"] = vertices;
    Json facets = Json::array();
    for (std::size_t i = 0; i < p.normals.size(); ++i) {
        Json normal = Json::array();
        for (const auto& x : p.normals[i]) normal.push_back(rational_to_json(x));
        Json fct{{"normal", normal}, {"offset", rational_to_json(p.offsets[i])}};
        if (i < p.facet_keys.size()) fct["tube"] = p.facet_keys[i];
        facets.push_back(fct);
    }
    j["facets"] = facets;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

Json read_json_argument(const std::string& arg) {
    if (std::filesystem::exists(arg)) return read_json_file(arg);
    try {
        return Json::parse(arg);
    } catch (const Json::parse_error&) {
        throw InputError("neither a file nor JSON: " + arg);
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::vector<Point2> stereographic_project(const std::vector<RatVector>& rays, const RatVector& pole) {
    std::vector<std::array<double, 3>> xs;
    for (const auto& r : rays) xs.push_back(to_unit(r));
    return project_unit(xs, to_unit(pole));
}

Plot plot_fan(const Fan& f, const PlotSpec& spec) {
    if (f.dimension != 3) throw InputError("plotting needs a 3-dimensional fan");
    std::vector<RatVector> rays = f.rays;
    if (!rays.empty() && rays.front().size() != 3) rays = working_rays(f);
    if (spec.pole.size() != 3) throw InputError("pole must be 3-dimensional");

    Plot plot;
    bool boundary = false;
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        auto lam = cone_coordinates(rays, f.cones[c], spec.pole);
        if (!lam) throw InputError("singular cone cannot be plotted");
        bool nonneg = std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return sgn(x) >= 0; });
        bool pos = std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return sgn(x) > 0; });
        if (pos) plot.outer_cone = static_cast<int>(c);
        else if (nonneg) boundary = true;
    }

    std::array<double, 3> p = to_unit(spec.pole);
    if (boundary) {
        plot.jitter = 1e-9;
        p = normalized({p[0] + plot.jitter, p[1] + 2 * plot.jitter, p[2] + 3 * plot.jitter});
    }
    std::vector<std::array<double, 3>> xs;
    for (const auto& r : rays) xs.push_back(to_unit(r));
    plot.points = project_unit(xs, p);
    if (boundary) {
        for (std::size_t c = 0; c < f.cones.size() && plot.outer_cone < 0; ++c) {
            const auto& k = f.cones[c];
            auto a = xs[static_cast<std::size_t>(k[0])], b = xs[static_cast<std::size_t>(k[1])], d = xs[static_cast<std::size_t>(k[2])];
            double det = dot(a, cross(b, d));
            double l0 = dot(p, cross(b, d)) / det, l1 = dot(a, cross(p, d)) / det, l2 = dot(a, cross(b, p)) / det;
            if (l0 > 0 && l1 > 0 && l2 > 0) plot.outer_cone = static_cast<int>(c);
        }
    }

    double lo_x = std::numeric_limits<double>::max(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
    for (const auto& q : plot.points) {
        lo_x = std::min(lo_x, q[0]), hi_x = std::max(hi_x, q[0]);
        lo_y = std::min(lo_y, q[1]), hi_y = std::max(hi_y, q[1]);
    }
    const double margin = 40.0;
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    double scale = (spec.size - 2 * margin) / span;
    auto sx = [&](const Point2& q) { return margin + (q[0] - lo_x) * scale; };
    auto sy = [&](const Point2& q) { return spec.size - margin - (q[1] - lo_y) * scale; };

    std::ostringstream svg;
    svg << std::setprecision(10);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.size << "\" height=\"" << spec.size
        << "\" viewBox=\"0 0 " << spec.size << ' ' << spec.size << "\">\n";
    svg << "<metadata>pole=";
    for (std::size_t i = 0; i < 3; ++i) svg << (i ? "," : "") << to_string(spec.pole[i]);
    svg << "; jitter=" << plot.jitter << "; outer_cone=" << plot.outer_cone << "</metadata>\n";
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        bool outer = static_cast<int>(c) == plot.outer_cone;
        svg << "<polygon class=\"" << (outer ? "cell outer" : "cell") << "\" data-rays=\"";
        for (std::size_t i = 0; i < f.cones[c].size(); ++i)
            svg << (i ? ";" : "") << xml_escape(f.ray_keys[static_cast<std::size_t>(f.cones[c][i])]);
        svg << "\" points=\"";
        for (std::size_t i = 0; i < f.cones[c].size(); ++i) {
            const auto& q = plot.points[static_cast<std::size_t>(f.cones[c][i])];
            svg << (i ? " " : "") << sx(q) << ',' << sy(q);
        }
        svg << "\" fill=\"" << (outer ? "none" : "#dde6f2") << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t r = 0; r < plot.points.size(); ++r) {
        const auto& q = plot.points[r];
        svg << "<circle class=\"ray\" data-ray=\"" << xml_escape(f.ray_keys[r]) << "\" cx=\"" << sx(q) << "\" cy=\"" << sy(q)
            << "\" r=\"3\" fill=\"#a11\"/>\n";
        if (spec.labels)
            svg << "<text x=\"" << sx(q) + 5 << "\" y=\"" << sy(q) - 5 << "\" font-size=\"11\" font-family=\"sans-serif\">"
                << xml_escape(f.ray_keys[r]) << "</text>\n";
    }
    svg << "</svg>\n";
    plot.svg = svg.str();
    return plot;
}

}  // namespace nestfan
