#include "nestfan/cli.hpp"

#include "nestfan/families.hpp"
#include "nestfan/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

namespace nestfan {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int max_vertices() {
    const char* env = std::getenv("NESTFAN_MAX_VERTICES");
    if (!env || !*env) return 16;
    try {
        std::size_t used = 0;
        int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError("NESTFAN_MAX_VERTICES must be a positive integer");
}

Graph graph_arg(const std::string& spec) {
    Graph g = load_graph(spec);
    if (static_cast<int>(g.num_vertices()) > max_vertices())
        throw InputError("graph has " + std::to_string(g.num_vertices()) + " vertices, above NESTFAN_MAX_VERTICES=" +
                         std::to_string(max_vertices()));
    return g;
}

enum class Kind { primal, dual, nested, design_primal, design_dual };

Kind kind_arg(std::string s) {
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "primal") return Kind::primal;
    if (s == "dual") return Kind::dual;
    if (s == "nested") return Kind::nested;
    if (s == "design-primal") return Kind::design_primal;
    if (s == "design-dual") return Kind::design_dual;
    throw InputError("unknown kind " + s + " (primal, dual, nested, design-primal, design-dual)");
}

bool is_design(Kind k) { return k == Kind::design_primal || k == Kind::design_dual; }

struct FanSetup {
    Graph g;
    Kind kind = Kind::primal;
    Tubing initial;
    DesignTubing design_initial;
    Fan fan;
};

FanSetup make_fan(const std::string& graph, const std::string& kind, const std::string& initial) {
    FanSetup s;
    s.g = graph_arg(graph);
    s.kind = kind_arg(kind);
    if (s.kind == Kind::nested) {
        s.fan = build_nested_fan(s.g);
    } else if (is_design(s.kind)) {
        s.design_initial = initial == "auto" ? all_squares_tubing(s.g) : design_tubing_from_json(s.g, read_json_argument(initial));
        if (!is_maximal_design_tubing(s.g, s.design_initial)) throw InputError("initial design tubing is not maximal");
        s.fan = build_design_fan(s.g, s.design_initial, s.kind == Kind::design_primal ? Mode::primal : Mode::dual);
    } else {
        s.initial = initial == "auto" ? greedy_maximal_tubing(s.g) : tubing_from_json(s.g, read_json_argument(initial));
        if (!is_maximal_tubing(s.g, s.initial)) throw InputError("initial tubing is not maximal");
        s.fan = build_fan(s.g, s.initial, s.kind == Kind::primal ? Mode::primal : Mode::dual);
    }
    return s;
}

Json provenance(const FanSetup& s, const std::string& graph) {
    Json p{{"graph", graph}};
    if (is_design(s.kind)) p["initial"] = design_tubing_to_json(s.g, s.design_initial);
    else if (s.kind != Kind::nested) p["initial"] = tubing_to_json(s.g, s.initial);
    return p;
}

void print_report(const FanReport& rep, std::ostream& out) {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "status\t" << (rep.ok ? "ok" : "FAILED") << '\n'
        << "basis_cone\t" << yes(rep.basis_cone_ok) << '\n'
        << "pseudomanifold\t" << yes(rep.pseudomanifold_ok) << '\n'
        << "distinct_rays\t" << yes(rep.distinct_rays_ok) << '\n'
        << "cones_nonsingular\t" << yes(rep.cones_nonsingular) << '\n'
        << "disjointness\t" << yes(rep.disjointness_ok) << '\n'
        << "condition_1\t" << yes(rep.structural_condition1) << '\n';
    std::size_t separating = 0, local = 0, local_known = 0;
    for (const auto& f : rep.flips) {
        separating += f.separating;
        if (f.local) {
            ++local_known;
            local += *f.local;
        }
    }
    out << "flips\t" << rep.flips.size() << '\n' << "separating\t" << separating << '\n';
    if (local_known) out << "local\t" << local << '/' << local_known << '\n';
    for (std::size_t i = 0; i < rep.problems.size() && i < 20; ++i) out << "problem\t" << rep.problems[i] << '\n';
}

std::string dependence_line(const Fan& f, const FlipRecord& rec) {
    std::ostringstream line;
    line << f.ray_keys[static_cast<std::size_t>(rec.leaving)] << " -> " << f.ray_keys[static_cast<std::size_t>(rec.entering)]
         << "\t";
    bool first = true;
    for (std::size_t i = 0; i < rec.rays.size(); ++i) {
        if (sgn(rec.coeffs[i]) == 0) continue;
        line << (first ? "" : " ") << (sgn(rec.coeffs[i]) > 0 && !first ? "+" : "") << rec.coeffs[i].get_str() << '*'
             << f.ray_keys[static_cast<std::size_t>(rec.rays[i])];
        first = false;
    }
    line << "\tseparating=" << (rec.separating ? "yes" : "no");
    if (rec.local) line << "\tlocal=" << (*rec.local ? "yes" : "no");
    return line.str();
}

RatVector pole_arg(const std::string& s) {
    RatVector p;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) p.push_back(rational_from_json(Json(part)));
    if (p.size() != 3) throw InputError("pole needs three comma-separated coordinates");
    return p;
}

// Family name and sizes of a single family shorthand.
std::optional<std::pair<std::string, int>> family_of(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos || spec.find('+') != std::string::npos || spec.find(',') != std::string::npos)
        return std::nullopt;
    try {
        return std::make_pair(spec.substr(0, colon), std::stoi(spec.substr(colon + 1)));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int cmd_count(const std::string& spec, std::ostream& out) {
    Graph g = graph_arg(spec);
    Counts brute = brute_force_counts(g);
    auto fam = family_of(spec);
    std::optional<Counts> closed;
    bool printed = false;
    if (fam && fam->second >= 2) {
        int n = fam->second - 1;
        if (fam->first == "path") closed = closed_form_counts(Family::path, n);
        else if (fam->first == "cycle" && n >= 2) closed = closed_form_counts(Family::cycle, n);
        else if (fam->first == "star") closed = closed_form_counts(Family::star, n);
        else if (fam->first == "complete") {
            closed = complete_printed_counts(n);
            printed = true;
        }
    }
    bool all_match = true;
    out << "quantity\tbrute_force";
    if (closed) out << '\t' << (printed ? "printed_formula" : "closed_form") << "\tmatch";
    out << '\n';
    auto row = [&](const std::string& name, const Int& b, const std::optional<Int>& c) {
        out << name << '\t' << b.get_str();
        if (closed) {
            bool m = c && *c == b;
            if (!printed) all_match = all_match && m;
            out << '\t' << (c ? c->get_str() : "-") << '\t' << (m ? "yes" : "no");
        }
        out << '\n';
    };
    auto at = [](const Counts& c, std::size_t k) -> std::optional<Int> {
        if (k < c.k_tubings.size()) return c.k_tubings[k];
        return std::nullopt;
    };
    row("proper_tubes", brute.proper_tubes, closed ? std::optional<Int>(closed->proper_tubes) : std::nullopt);
    row("maximal_tubings", brute.maximal_tubings, closed ? std::optional<Int>(closed->maximal_tubings) : std::nullopt);
    for (std::size_t k = 0; k < brute.k_tubings.size(); ++k)
        row("tubings_" + std::to_string(k), brute.k_tubings[k], closed ? at(*closed, k) : std::nullopt);
    if (brute.total) row("tubings_total", *brute.total, closed ? closed->total : std::nullopt);
    if (printed)
        out << "note\tthe printed complete-graph formulas are indexed for K_n, not K_{n+1}; brute force is authoritative\n";
    return all_match ? kOk : kFailed;
}

int cmd_model(const std::string& which, int n, std::ostream& out) {
    if (n < 1) throw InputError("--n must be positive");
    int bad = 0;
    if (which == "path") {
        Graph g = make_family(Family::path, {n + 1});
        auto ds = polygon_diagonals(n);
        out << "diagonal\ttube\n";
        for (auto d : ds) {
            Tube t = polygon_tube(g, n, d);
            out << '(' << d.a << ',' << d.b << ")\t" << set_to_string(g, t) << '\n';
            if (!(polygon_diagonal(g, n, t) == d)) ++bad;
            for (auto e : ds) {
                if (d == e) continue;
                Tube u = polygon_tube(g, n, e);
                bool cross = diagonals_cross(d, e);
                if (cross == are_compatible(g, t, u) || (cross && degree(g, t, u) != 1)) ++bad;
            }
        }
    } else if (which == "cycle") {
        if (n < 2) throw InputError("cycle model needs n >= 2");
        Graph g = make_family(Family::cycle, {n + 1});
        auto ds = cycle_diagonals(n);
        out << "diagonal_pair\ttube\n";
        for (const auto& d : ds) {
            Tube t = cycle_tube(g, n, d);
            Diagonal m = d.mirror(n);
            out << '(' << d.rep.a << ',' << d.rep.b << ')';
            if (!d.long_diagonal) out << " (" << m.a << ',' << m.b << ')';
            out << '\t' << set_to_string(g, t) << '\n';
            if (!(cycle_diagonal(g, n, t) == d)) ++bad;
            for (const auto& e : ds)
                if (!(d == e) && cycle_crossings(n, d, e) != degree(g, t, cycle_tube(g, n, e))) ++bad;
        }
    } else if (which == "complete") {
        Graph g = make_family(Family::complete, {n + 1});
        out << "tube\tphi\tpsi\n";
        auto path_string = [](const std::vector<int>& h) {
            std::string s;
            for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
            return s;
        };
        for (const auto& t : enumerate_tubes(g))
            out << set_to_string(g, t) << '\t' << path_string(complete_lattice_path(g, t, LatticeKind::phi)) << '\t'
                << path_string(complete_lattice_path(g, t, LatticeKind::psi)) << '\n';
    } else {
        throw InputError("model expects path, cycle or complete");
    }
    out << "check\t" << (bad ? "FAILED" : "ok") << '\n';
    return bad ? kFailed : kOk;
}

Tubing omega_tubing(const Graph& g, const Tubing& t, std::optional<int> rot, bool reverse) {
    std::vector<Tube> out;
    for (const auto& tube : t) {
        Tube x = tube;
        if (rot) x = path_rotation(g, *rot, x);
        if (reverse) x = path_reversal(g, x);
        if (!rot && !reverse) x = spider_omega(g, x);
        out.push_back(x);
    }
    return make_tubing(out);
}

int cmd_conjecture_scan(int max_n, int sample, unsigned long long seed, int jobs, std::ostream& out) {
    if (max_n < 2 || max_n > 6) throw InputError("--max-vertices must lie in 2..6");
    std::mt19937_64 rng(seed);
    std::size_t feasible = 0, infeasible = 0, invalid = 0;
    out << "graph\tinitial_tubings\tfeasible\tinfeasible\tinvalid\n";
    for (int n = 2; n <= max_n; ++n) {
        for (const auto& g : connected_graph_catalog(n)) {
            ComplexData data = complex_data(g);
            std::vector<Tubing> initials;
            for (const auto& c : data.cones) {
                Tubing t;
                for (int i : c) t.push_back(data.tubes[static_cast<std::size_t>(i)]);
                initials.push_back(make_tubing(t));
            }
            if (sample > 0 && static_cast<std::size_t>(sample) < initials.size()) {
                std::shuffle(initials.begin(), initials.end(), rng);
                initials.resize(static_cast<std::size_t>(sample));
            }
            std::size_t f = 0, i = 0, v = 0;
            for (const auto& t : initials)
                for (Mode mode : {Mode::primal, Mode::dual}) {
                    Fan fan = build_fan(g, data, t, mode);
                    FanReport rep = verify_fan(fan, jobs);
                    switch (find_weights_lp(fan, rep).outcome) {
                    case WeightSearch::Outcome::feasible: ++f; break;
                    case WeightSearch::Outcome::infeasible: ++i; break;
                    case WeightSearch::Outcome::invalid_fan: ++v; break;
                    }
                }
            std::string edges;
            for (auto [a, b] : g.edges()) edges += (edges.empty() ? "" : " ") + g.label(a) + '-' + g.label(b);
            out << (edges.empty() ? "1" : edges) << '\t' << initials.size() << '\t' << f << '\t' << i << '\t' << v << '\n';
            feasible += f, infeasible += i, invalid += v;
        }
    }
    out << "total\t-\t" << feasible << '\t' << infeasible << '\t' << invalid << '\n';
    return infeasible || invalid ? kFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compatibility fans of graph associahedra"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string graph, kind = "primal", initial = "auto", out_path, format = "json", weights = "lp", tube_arg,
                tubing_arg, pole = "-1,-1,-1", fan_file;
    bool design = false, maximal = false, as_json = false, reverse = false, no_labels = false;
    int size = -1, jobs = 1, n = 0, star = 0, image = 600, max_n = 4, sample = 0, rot = 0;
    unsigned long long seed = 1;
    std::string model_kind;

    auto graph_opt = [&](CLI::App* c) { c->add_option("--graph", graph, "family shorthand or graph JSON file")->required(); };
    auto fan_opts = [&](CLI::App* c) {
        c->add_option("--kind", kind, "primal, dual, nested, design-primal or design-dual");
        c->add_option("--initial", initial, "maximal (design) tubing as JSON or file, or auto");
    };

    auto* tubes = app.add_subcommand("tubes", "list proper tubes");
    graph_opt(tubes);
    tubes->add_flag("--design", design, "list design tubes");
    tubes->add_flag("--json", as_json);

    auto* tubings = app.add_subcommand("tubings", "list tubings");
    graph_opt(tubings);
    tubings->add_option("--size", size, "number of tubes");
    tubings->add_flag("--maximal", maximal);
    tubings->add_flag("--design", design, "maximal design tubings");
    tubings->add_flag("--json", as_json);

    auto* degree_cmd = app.add_subcommand("degree", "compatibility degree table as TSV");
    graph_opt(degree_cmd);
    degree_cmd->add_flag("--design", design);

    auto* fan_cmd = app.add_subcommand("fan", "build a fan as JSON");
    graph_opt(fan_cmd);
    fan_opts(fan_cmd);
    fan_cmd->add_option("--out", out_path);

    auto* check = app.add_subcommand("check-fan", "verify that a fan is complete and simplicial");
    check->add_option("--graph", graph);
    check->add_option("--fan", fan_file, "fan JSON file");
    fan_opts(check);
    check->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* dep = app.add_subcommand("dependence", "flip dependences of a fan");
    graph_opt(dep);
    fan_opts(dep);
    dep->add_option("--tube", tube_arg, "restrict to flips of this tube (JSON)");
    dep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* poly = app.add_subcommand("polytope", "realize a fan as the normal fan of a polytope");
    poly->add_option("--graph", graph);
    fan_opts(poly);
    poly->add_option("--weights", weights, "lp, path-cycle or nested");
    poly->add_option("--star", star, "stellohedron for the star with this many leaves");
    poly->add_option("--format", format, "json, hrep or vrep");
    poly->add_option("--out", out_path);

    auto* count = app.add_subcommand("count", "brute-force counts against closed forms");
    graph_opt(count);

    auto* model = app.add_subcommand("model", "polygon and lattice path models");
    model->add_option("family", model_kind, "path, cycle or complete")->required();
    model->add_option("--n", n)->required();

    auto* orbits = app.add_subcommand("orbits", "automorphism orbits of maximal tubings");
    graph_opt(orbits);

    auto* omega = app.add_subcommand("omega", "apply the spider involution or a path rotation to a tubing");
    graph_opt(omega);
    omega->add_option("--tubing", tubing_arg, "tubing JSON or file")->required();
    auto* rot_opt = omega->add_option("--rot", rot, "rotation power (paths)");
    omega->add_flag("--reverse", reverse, "reflection (paths)");
    omega->add_flag("--design", design, "design involution (octopuses)");

    auto* plot = app.add_subcommand("plot", "stereographic SVG of a 3-dimensional fan");
    graph_opt(plot);
    fan_opts(plot);
    plot->add_option("--out", out_path)->required();
    plot->add_option("--size", image)->check(CLI::PositiveNumber);
    plot->add_option("--pole", pole, "pole direction a,b,c");
    plot->add_flag("--no-labels", no_labels);

    auto* scan = app.add_subcommand("conjecture-scan", "search polytopality certificates by LP over small graphs");
    scan->add_option("--max-vertices", max_n);
    scan->add_option("--sample", sample, "initial tubings per graph, 0 for all");
    scan->add_option("--seed", seed);
    scan->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (tubes->parsed()) {
            Graph g = graph_arg(graph);
            Json j = Json::array();
            if (design) {
                for (const auto& t : enumerate_design_tubes(g)) {
                    if (as_json) j.push_back(design_tube_to_json(g, t));
                    else out << design_tube_to_string(g, t) << '\n';
                }
            } else {
                for (const auto& t : enumerate_tubes(g)) {
                    if (as_json) j.push_back(tube_to_json(g, t));
                    else out << set_to_string(g, t) << '\n';
                }
            }
            if (as_json) out << j.dump() << '\n';
            return kOk;
        }
        if (tubings->parsed()) {
            Graph g = graph_arg(graph);
            Json j = Json::array();
            if (design) {
                for (const auto& t : enumerate_maximal_design_tubings(g)) {
                    if (as_json) j.push_back(design_tubing_to_json(g, t));
                    else out << design_tubing_to_string(g, t) << '\n';
                }
            } else {
                std::vector<Tubing> list = maximal ? enumerate_maximal_tubings(g)
                                                   : enumerate_tubings(g, size >= 0 ? std::optional<int>(size) : std::nullopt);
                for (const auto& t : list) {
                    if (as_json) j.push_back(tubing_to_json(g, t));
                    else out << tubing_to_string(g, t) << '\n';
                }
            }
            if (as_json) out << j.dump() << '\n';
            return kOk;
        }
        if (degree_cmd->parsed()) {
            Graph g = graph_arg(graph);
            if (design) {
                auto ts = enumerate_design_tubes(g);
                out << "degree";
                for (const auto& t : ts) out << '\t' << design_tube_to_string(g, t);
                out << '\n';
                for (const auto& a : ts) {
                    out << design_tube_to_string(g, a);
                    for (const auto& b : ts) out << '\t' << design_degree(g, a, b);
                    out << '\n';
                }
            } else {
                auto ts = enumerate_tubes(g);
                out << "degree";
                for (const auto& t : ts) out << '\t' << set_to_string(g, t);
                out << '\n';
                for (const auto& a : ts) {
                    out << set_to_string(g, a);
                    for (const auto& b : ts) out << '\t' << degree(g, a, b);
                    out << '\n';
                }
            }
            return kOk;
        }
        if (fan_cmd->parsed()) {
            FanSetup s = make_fan(graph, kind, initial);
            std::string text = fan_to_json(s.fan, provenance(s, graph)).dump(2) + "\n";
            if (out_path.empty()) out << text;
            else write_text_file(out_path, text);
            return kOk;
        }
        if (check->parsed()) {
            Fan f;
            if (!fan_file.empty()) f = fan_from_json(read_json_file(fan_file));
            else if (!graph.empty()) f = make_fan(graph, kind, initial).fan;
            else throw InputError("check-fan needs --graph or --fan");
            FanReport rep = verify_fan(f, jobs);
            print_report(rep, out);
            return rep.ok ? kOk : kFailed;
        }
        if (dep->parsed()) {
            FanSetup s = make_fan(graph, kind, initial);
            FanReport rep = verify_fan(s.fan, jobs);
            std::string key;
            if (!tube_arg.empty()) {
                Json j = read_json_argument(tube_arg);
                key = is_design(s.kind) ? design_tube_to_string(s.g, design_tube_from_json(s.g, j))
                                        : set_to_string(s.g, tube_from_json(s.g, j));
                if (s.fan.ray_index(key) < 0) throw InputError("not a ray of the fan: " + key);
            }
            for (const auto& rec : rep.flips) {
                if (!key.empty() && s.fan.ray_keys[static_cast<std::size_t>(rec.leaving)] != key &&
                    s.fan.ray_keys[static_cast<std::size_t>(rec.entering)] != key)
                    continue;
                out << dependence_line(s.fan, rec) << '\n';
            }
            return rep.ok ? kOk : kFailed;
        }
        if (poly->parsed()) {
            Polytope p;
            Fan f;
            if (star > 0) {
                p = star_polytope(star);
                Graph g = make_family(Family::star, {star + 1});
                std::vector<Tube> leaves;
                for (int i = 1; i <= star; ++i) leaves.push_back(g.set_of({i}));
                f = build_fan(g, make_tubing(leaves), Mode::primal);
            } else {
                if (graph.empty()) throw InputError("polytope needs --graph or --star");
                FanSetup s = make_fan(graph, kind, initial);
                f = s.fan;
                FanReport rep = verify_fan(f, jobs);
                if (!rep.ok) {
                    print_report(rep, err);
                    return kFailed;
                }
                std::optional<RatVector> w;
                if (weights == "lp") {
                    WeightSearch ws = find_weights_lp(f, rep);
                    if (ws.outcome == WeightSearch::Outcome::feasible) w = ws.weights;
                } else if (weights == "path-cycle") {
                    w = path_cycle_weights(s.g, f, rep);
                } else if (weights == "nested") {
                    if (!is_design(s.kind)) throw InputError("nested weights apply to design fans");
                    w = design_nested_weights(s.g, f, rep);
                } else {
                    throw InputError("unknown weights " + weights);
                }
                if (!w) {
                    err << "no positive weights found\n";
                    return kFailed;
                }
                p = realize_polytope(f, *w);
            }
            std::string why;
            bool normal = verify_normal_fan(p, f, &why);
            std::string text;
            if (format == "json") text = polytope_to_json(p).dump(2) + "\n";
            else if (format == "hrep") text = h_rep_text(p);
            else if (format == "vrep") text = v_rep_text(p);
            else throw InputError("unknown format " + format);
            if (out_path.empty()) out << text;
            else write_text_file(out_path, text);
            if (!normal) err << "normal fan mismatch: " << why << '\n';
            return normal ? kOk : kFailed;
        }
        if (count->parsed()) return cmd_count(graph, out);
        if (model->parsed()) return cmd_model(model_kind, n, out);
        if (orbits->parsed()) {
            Graph g = graph_arg(graph);
            out << "automorphisms\t" << graph_automorphisms(g).size() << '\n'
                << "maximal_tubings\t" << enumerate_maximal_tubings(g).size() << '\n'
                << "orbits\t" << tubing_orbit_count(g) << '\n';
            auto fam = family_of(graph);
            if (fam && fam->first == "path" && fam->second >= 2)
                out << "dihedral_orbits\t" << path_dihedral_orbit_count(fam->second - 1) << '\n';
            return kOk;
        }
        if (omega->parsed()) {
            Graph g = graph_arg(graph);
            Json j = read_json_argument(tubing_arg);
            if (design) {
                auto p = octopus_from_labels(g);
                if (!p) throw InputError("design involution needs an octopus with labels from octopus:...");
                std::vector<DesignTube> image_tubes;
                for (const auto& x : design_tubing_from_json(g, j)) image_tubes.push_back(design_omega(g, *p, x));
                out << design_tubing_to_json(g, make_design_tubing(image_tubes)).dump() << '\n';
                return kOk;
            }
            Tubing t = tubing_from_json(g, j);
            std::optional<int> r;
            if (rot_opt->count()) r = rot;
            out << tubing_to_json(g, omega_tubing(g, t, r, reverse)).dump() << '\n';
            return kOk;
        }
        if (plot->parsed()) {
            FanSetup s = make_fan(graph, kind, initial);
            PlotSpec spec;
            spec.pole = pole_arg(pole);
            spec.size = image;
            spec.labels = !no_labels;
            Plot p = plot_fan(s.fan, spec);
            write_text_file(out_path, p.svg);
            out << "cones\t" << s.fan.cones.size() << '\n' << "rays\t" << s.fan.rays.size() << '\n' << "outer_cone\t";
            if (p.outer_cone >= 0)
                for (int r : s.fan.cones[static_cast<std::size_t>(p.outer_cone)]) out << s.fan.ray_keys[static_cast<std::size_t>(r)] << ' ';
            out << '\n';
            return kOk;
        }
        if (scan->parsed()) return cmd_conjecture_scan(max_n, sample, seed, jobs, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace nestfan
