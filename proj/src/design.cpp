#include "nestfan/design.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace nestfan {

std::vector<DesignTube> enumerate_design_tubes(const Graph& g) {
    std::vector<DesignTube> out;
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) out.push_back(DesignTube::make_square(v));
    for (auto& t : enumerate_tubes(g, true)) out.push_back(DesignTube::make_round(std::move(t)));
    std::sort(out.begin(), out.end());
    return out;
}

DesignTubing make_design_tubing(std::vector<DesignTube> tubes) {
    std::sort(tubes.begin(), tubes.end());
    tubes.erase(std::unique(tubes.begin(), tubes.end()), tubes.end());
    return tubes;
}

std::string design_tubing_to_string(const Graph& g, const DesignTubing& t) {
    std::string out = "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += design_tube_to_string(g, t[i]);
    }
    return out + "}";
}

namespace {

bool valid_design_tube(const Graph& g, const DesignTube& x) {
    if (x.square) return x.vertex >= 0 && x.vertex < static_cast<int>(g.num_vertices());
    return x.round.universe() == g.num_vertices() && is_tube(g, x.round);
}

}  // namespace

bool is_design_tubing(const Graph& g, const DesignTubing& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!valid_design_tube(g, t[i])) return false;
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j] || !design_compatible(g, t[i], t[j])) return false;
    }
    return true;
}

bool is_maximal_design_tubing(const Graph& g, const DesignTubing& t) {
    return t.size() == g.num_vertices() && is_design_tubing(g, t);
}

DesignTubing all_squares_tubing(const Graph& g) {
    DesignTubing t;
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) t.push_back(DesignTube::make_square(v));
    return t;
}

int DesignComplexData::tube_index(const DesignTube& t) const {
    auto it = std::lower_bound(tubes.begin(), tubes.end(), t);
    return (it != tubes.end() && *it == t) ? static_cast<int>(it - tubes.begin()) : -1;
}

DesignComplexData design_complex_data(const Graph& g) {
    DesignComplexData d;
    d.tubes = enumerate_design_tubes(g);
    const std::size_t m = d.tubes.size();
    const std::size_t target = g.num_vertices();
    std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) compat[i][j] = compat[j][i] = design_compatible(g, d.tubes[i], d.tubes[j]);
    std::vector<int> clique;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        if (clique.size() == target) {
            d.cones.push_back(clique);
            return;
        }
        for (std::size_t i = from; i < m; ++i) {
            bool ok = std::all_of(clique.begin(), clique.end(), [&](int c) { return compat[static_cast<std::size_t>(c)][i]; });
            if (!ok) continue;
            clique.push_back(static_cast<int>(i));
            grow(i + 1);
            clique.pop_back();
        }
    };
    grow(0);
    return d;
}

std::vector<DesignTubing> enumerate_maximal_design_tubings(const Graph& g) {
    DesignComplexData d = design_complex_data(g);
    std::vector<DesignTubing> out;
    for (const auto& cone : d.cones) {
        DesignTubing t;
        for (int i : cone) t.push_back(d.tubes[static_cast<std::size_t>(i)]);
        out.push_back(std::move(t));
    }
    return out;
}

DesignFlipResult design_flip(const Graph& g, const DesignTubing& t, const DesignTube& x) {
    if (!is_maximal_design_tubing(g, t)) throw InputError("design flip needs a maximal design tubing");
    if (std::find(t.begin(), t.end(), x) == t.end()) throw InputError("tube to flip is not in the tubing");
    std::vector<DesignTube> rest;
    for (const auto& y : t)
        if (y != x) rest.push_back(y);
    std::optional<DesignTube> found;
    for (const auto& y : enumerate_design_tubes(g)) {
        if (y == x || std::find(rest.begin(), rest.end(), y) != rest.end()) continue;
        if (!std::all_of(rest.begin(), rest.end(), [&](const DesignTube& r) { return design_compatible(g, r, y); })) continue;
        if (found) throw InputError("design flip is not unique");
        found = y;
    }
    if (!found) throw InputError("design flip has no completion");
    rest.push_back(*found);
    return {*found, make_design_tubing(std::move(rest))};
}

Fan build_design_fan(const Graph& g, const DesignTubing& initial, Mode mode) {
    return build_design_fan(g, design_complex_data(g), initial, mode);
}

Fan build_design_fan(const Graph& g, const DesignComplexData& data, const DesignTubing& initial, Mode mode) {
    if (!is_maximal_design_tubing(g, initial)) throw InputError("initial design tubing must be maximal");
    Fan f;
    f.dimension = static_cast<int>(g.num_vertices());
    f.kind = mode == Mode::primal ? FanKind::design_primal : FanKind::design_dual;
    f.vertex_labels = g.labels();
    for (const auto& t : initial) f.coordinate_keys.push_back(design_tube_to_string(g, t));
    for (const auto& t : data.tubes) {
        f.ray_keys.push_back(design_tube_to_string(g, t));
        f.rays.push_back(to_rat_vector(design_compat_vector(g, initial, t, mode)));
    }
    f.cones = data.cones;
    std::vector<int> base;
    for (const auto& t : initial) base.push_back(data.tube_index(t));
    std::sort(base.begin(), base.end());
    f.base_cone = f.cone_index(base);
    return f;
}

Fan build_design_nested_fan(const Graph& g) {
    DesignComplexData data = design_complex_data(g);
    const std::size_t n = g.num_vertices();
    Fan f;
    f.dimension = static_cast<int>(n);
    f.kind = FanKind::custom;
    f.vertex_labels = g.labels();
    for (const auto& l : g.labels()) f.coordinate_keys.push_back("|" + l + "|");
    for (const auto& t : data.tubes) {
        f.ray_keys.push_back(design_tube_to_string(g, t));
        RatVector r(n);
        if (t.square) r[static_cast<std::size_t>(t.vertex)] = -1;
        else
            for (int v : t.round.members()) r[static_cast<std::size_t>(v)] = 1;
        f.rays.push_back(std::move(r));
    }
    f.cones = data.cones;
    std::vector<int> base;
    for (const auto& t : all_squares_tubing(g)) base.push_back(data.tube_index(t));
    f.base_cone = f.cone_index(base);
    return f;
}

Int DesignDependence::coefficient(const DesignTube& x) const {
    for (std::size_t i = 0; i < tubes.size(); ++i)
        if (tubes[i] == x) return coeffs[i];
    return Int(0);
}

namespace {

// Accumulates Σ c_x dᵛ(x) = 0.
struct Terms {
    std::map<DesignTube, Rational> c;
    void add(const DesignTube& x, const Rational& k) { c[x] += k; }

    DesignDependence finish(const DesignTube& pivot) const {
        DesignDependence d;
        Int den = 1;
        for (const auto& [x, k] : c)
            if (sgn(k) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), k.get_den_mpz_t());
        Int g = 0;
        for (const auto& [x, k] : c) {
            if (sgn(k) == 0) continue;
            Rational scaled = k * Rational(den);
            d.tubes.push_back(x);
            d.coeffs.push_back(scaled.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
        }
        if (sgn(g) == 0) return d;
        int sign = sgn(d.coefficient(pivot)) < 0 ? -1 : 1;
        for (auto& x : d.coeffs) x = x / g * sign;
        return d;
    }
};

}  // namespace

std::optional<DesignDependence> design_square_flip_dependence(const Graph& g, const DesignTubing& initial,
                                                              const Tube& t, int v) {
    if (!is_maximal_design_tubing(g, initial)) throw InputError("initial design tubing must be maximal");
    if (!is_tube(g, t) || !t.contains(v)) throw InputError("square flip needs a round tube containing v");
    for (const auto& x : initial)
        if (x == DesignTube::make_round(t)) return std::nullopt;
    auto deg = [&g](const DesignTube& a, const DesignTube& b) { return design_degree(g, a, b); };
    const DesignTube square_v = DesignTube::make_square(v);
    const DesignTube round_t = DesignTube::make_round(t);

    VertexSet squares = g.empty_set();
    std::vector<Tube> rounds;
    for (const auto& x : initial) {
        if (x.square) squares.insert(x.vertex);
        else rounds.push_back(x.round);
    }
    // Root of each initial round tube: the vertex in no smaller initial round tube.
    std::map<int, Tube> rooted;
    for (const auto& s : rounds) {
        VertexSet rest = s;
        for (const auto& u : rounds)
            if (u.is_proper_subset_of(s)) rest -= u;
        if (rest.size() != 1) throw InputError("initial design tubing has a round tube without a unique root");
        rooted.emplace(rest.first(), s);
    }

    Tube minus_v = t;
    minus_v.erase(v);
    std::vector<Tube> a = components_of(g, minus_v);
    const bool v_initial = squares.contains(v);
    std::vector<Tube> a_square;
    for (const auto& x : a)
        if (x.intersects(squares)) a_square.push_back(x);
    std::vector<int> neighbors = g.neighborhood(t).members();

    Terms terms;
    terms.add(round_t, 1);
    if (!a_square.empty() || v_initial) {
        std::vector<std::pair<Tube, int>> rooted_neighbors;
        for (int w : neighbors)
            if (auto it = rooted.find(w); it != rooted.end()) rooted_neighbors.emplace_back(it->second, w);
        std::sort(rooted_neighbors.begin(), rooted_neighbors.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<Rational> beta;
        for (std::size_t i = 0; i < rooted_neighbors.size(); ++i) {
            const DesignTube ti = DesignTube::make_round(rooted_neighbors[i].first);
            Rational b = deg(round_t, ti);
            for (const auto& aj : a_square) b -= deg(DesignTube::make_round(aj), ti) - deg(square_v, ti);
            for (std::size_t r = 0; r < i; ++r) b -= beta[r] * deg(DesignTube::make_square(rooted_neighbors[r].second), ti);
            beta.push_back(b);
        }
        for (const auto& aj : a_square) terms.add(DesignTube::make_round(aj), -1);
        terms.add(square_v, v_initial ? 1 : static_cast<long>(a_square.size()));
        for (std::size_t i = 0; i < beta.size(); ++i) terms.add(DesignTube::make_square(rooted_neighbors[i].second), -beta[i]);
        return terms.finish(round_t);
    }

    std::optional<Tube> t0;
    for (const auto& s : rounds)
        if (t.is_subset_of(s) && (!t0 || s.size() < t0->size())) t0 = s;
    if (!t0) return std::nullopt;
    int z = -1;
    for (const auto& [root, s] : rooted)
        if (s == *t0) z = root;
    std::vector<int> inside;
    for (int w : neighbors)
        if (t0->contains(w)) inside.push_back(w);

    if (z == v) {
        terms.add(square_v, static_cast<long>(inside.size()));
        for (int w : inside) terms.add(DesignTube::make_square(w), -1);
        return terms.finish(round_t);
    }
    Tube a1;
    for (const auto& x : a)
        if (x.contains(z)) a1 = x;
    if (a1.universe() == 0) throw InputError("root of the minimal initial tube is outside t");
    VertexSet near_a1 = g.neighborhood(a1);
    // w_1..w_r avoid a_1; w_{r+1}..w_s are adjacent to a_1.
    std::vector<int> apart, adjacent;
    for (int w : inside) (near_a1.contains(w) ? adjacent : apart).push_back(w);
    const long s = static_cast<long>(inside.size());
    const long r = static_cast<long>(apart.size());
    // (s-r+1) dᵛ(t) = s (dᵛ(a_1) - dᵛ(|v|) - Σ_{i>r} dᵛ(|w_i|)) + (s-r+1) Σ_i dᵛ(|w_i|).
    terms.c.clear();
    terms.add(round_t, s - r + 1);
    terms.add(DesignTube::make_round(a1), -s);
    terms.add(square_v, s);
    for (int w : adjacent) terms.add(DesignTube::make_square(w), s);
    for (int w : inside) terms.add(DesignTube::make_square(w), -(s - r + 1));
    return terms.finish(round_t);
}

bool design_dependence_holds(const Graph& g, const DesignTubing& initial, const DesignDependence& d) {
    std::vector<Int> sum(initial.size(), 0);
    for (std::size_t i = 0; i < d.tubes.size(); ++i) {
        auto vec = design_compat_vector(g, initial, d.tubes[i], Mode::dual);
        for (std::size_t k = 0; k < vec.size(); ++k) sum[k] += d.coeffs[i] * vec[k];
    }
    return std::all_of(sum.begin(), sum.end(), [](const Int& x) { return sgn(x) == 0; });
}

std::optional<RatVector> design_nested_weights(const Graph& g, const Fan& f, const FanReport& rep) {
    if (f.coordinate_keys.size() != g.num_vertices()) throw InputError("expected a design fan of the graph");
    const std::size_t n = g.num_vertices();
    Int three_n = 1;
    for (std::size_t i = 0; i < n; ++i) three_n *= 3;
    std::map<std::string, DesignTube> by_key;
    for (const auto& t : enumerate_design_tubes(g)) by_key.emplace(design_tube_to_string(g, t), t);
    RatVector w(f.rays.size());
    std::vector<char> square(f.rays.size(), 0);
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        auto it = by_key.find(f.ray_keys[r]);
        if (it == by_key.end()) throw InputError("ray " + f.ray_keys[r] + " is not a design tube");
        if (it->second.square) {
            square[r] = 1;
            continue;
        }
        const std::size_t k = it->second.round.size();
        Int three_k = 1;
        for (std::size_t i = 0; i < k; ++i) three_k *= 3;
        w[r] = Rational(three_n * Int(static_cast<long>(k)) - three_k);
    }
    Int c = 1;
    std::vector<std::pair<Rational, Rational>> rows;
    for (const auto& rec : rep.flips) {
        Rational a = 0, b = 0;
        for (std::size_t i = 0; i < rec.rays.size(); ++i) {
            std::size_t r = static_cast<std::size_t>(rec.rays[i]);
            if (square[r]) b += Rational(rec.coeffs[i]);
            else a += Rational(rec.coeffs[i]) * w[r];
        }
        rows.emplace_back(a, b);
        if (sgn(b) > 0 && sgn(a + b * Rational(c)) <= 0) {
            Rational bound = -a / b;
            Int need = bound.get_num() / bound.get_den() + 1;
            if (need > c) c = need;
        }
    }
    for (std::size_t r = 0; r < w.size(); ++r)
        if (square[r]) w[r] = Rational(c);
    for (const auto& [a, b] : rows)
        if (sgn(a + b * Rational(c)) <= 0) return std::nullopt;
    return w;
}

Tube design_pi(const Graph& path, const DesignTube& x) {
    const int n = static_cast<int>(path.num_vertices());
    if (path.edges().size() + 1 != path.num_vertices()) throw InputError("Π needs a path");
    for (int v = 0; v + 1 < n; ++v)
        if (!path.adjacent(v, v + 1)) throw InputError("Π needs a path with vertices in order");
    if (!valid_design_tube(path, x)) throw InputError("not a design tube");
    Tube out(static_cast<std::size_t>(n) + 1);
    if (x.square)
        for (int v = x.vertex + 1; v <= n; ++v) out.insert(v);
    else
        for (int v : x.round.members()) out.insert(v);
    return out;
}

Graph octopus_for(const SpiderPresentation& p) {
    std::vector<int> sizes;
    for (std::size_t i = 0; i < p.legs.size(); ++i) sizes.push_back(p.leg_length(i));
    return make_family(Family::octopus, sizes);
}

namespace {

// Longest prefix of each leg inside t, -1 when the leg is missed.
std::vector<int> prefix_lengths(const std::vector<std::vector<int>>& legs, const VertexSet& t) {
    std::vector<int> k;
    for (const auto& leg : legs) {
        int x = -1;
        while (x + 1 < static_cast<int>(leg.size()) && t.contains(leg[static_cast<std::size_t>(x + 1)])) ++x;
        k.push_back(x);
    }
    return k;
}

// (leg, first, last) of a tube inside one leg avoiding position 0 unless allowed.
std::optional<std::tuple<std::size_t, int, int>> leg_interval(const std::vector<std::vector<int>>& legs, const VertexSet& t) {
    for (std::size_t i = 0; i < legs.size(); ++i) {
        int j = -1, k = -1;
        std::size_t hits = 0;
        for (std::size_t x = 0; x < legs[i].size(); ++x)
            if (t.contains(legs[i][x])) {
                if (j < 0) j = static_cast<int>(x);
                k = static_cast<int>(x);
                ++hits;
            }
        if (hits == t.size() && hits > 0) return std::make_tuple(i, j, k);
    }
    return std::nullopt;
}

}  // namespace

Tube design_omega_bar(const Graph& spider, const SpiderPresentation& p, const DesignTube& x) {
    if (!valid_design_tube(spider, x)) throw InputError("not a design tube of the spider");
    std::vector<int> offset;
    int next = 1;
    for (const auto& leg : p.legs) {
        offset.push_back(next);
        next += static_cast<int>(leg.size());
    }
    Tube out(static_cast<std::size_t>(next));
    auto put = [&](std::size_t i, int from, int to) {
        for (int j = from; j <= to; ++j) out.insert(offset[i] + j);
    };
    if (x.square) {
        for (std::size_t i = 0; i < p.legs.size(); ++i)
            for (std::size_t j = 0; j < p.legs[i].size(); ++j)
                if (p.legs[i][j] == x.vertex) put(i, 0, p.leg_length(i) - static_cast<int>(j));
        return out;
    }
    bool body = false;
    for (const auto& leg : p.legs) body = body || x.round.contains(leg[0]);
    if (!body) {
        auto [i, j, k] = *leg_interval(p.legs, x.round);
        const int ni = p.leg_length(i);
        put(i, ni + 1 - k, ni + 1 - j);
        return out;
    }
    out.insert(0);
    auto k = prefix_lengths(p.legs, x.round);
    for (std::size_t i = 0; i < p.legs.size(); ++i) put(i, 0, p.leg_length(i) - 1 - k[i]);
    return out;
}

std::optional<OctopusPresentation> octopus_from_labels(const Graph& g) {
    OctopusPresentation p;
    std::map<int, std::map<int, int>> at;
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
        if (g.label(v) == "*") {
            if (p.head >= 0) return std::nullopt;
            p.head = v;
            continue;
        }
        auto ij = parse_leg_label(g.label(v));
        if (!ij || !at[ij->first].emplace(ij->second, v).second) return std::nullopt;
    }
    if (p.head < 0) return std::nullopt;
    int expected = 1;
    std::size_t edges = 0;
    for (auto& [i, leg] : at) {
        if (i != expected++) return std::nullopt;
        std::vector<int> order;
        int expected_j = 0;
        for (auto& [j, v] : leg) {
            if (j != expected_j++) return std::nullopt;
            if (order.empty() ? !g.adjacent(p.head, v) : !g.adjacent(order.back(), v)) return std::nullopt;
            order.push_back(v);
            ++edges;
        }
        p.legs.push_back(std::move(order));
    }
    if (edges != g.edges().size()) return std::nullopt;
    return p;
}

DesignTube design_omega(const Graph& octopus, const OctopusPresentation& p, const DesignTube& x) {
    if (!valid_design_tube(octopus, x)) throw InputError("not a design tube of the octopus");
    auto leg_length = [&p](std::size_t i) { return static_cast<int>(p.legs[i].size()) - 1; };
    auto segment = [&](std::size_t i, int from, int to) {
        VertexSet s = octopus.empty_set();
        for (int j = from; j <= to; ++j) s.insert(p.legs[i][static_cast<std::size_t>(j)]);
        return s;
    };
    if (x.square) {
        if (x.vertex == p.head) return x;
        for (std::size_t i = 0; i < p.legs.size(); ++i)
            for (std::size_t j = 0; j < p.legs[i].size(); ++j)
                if (p.legs[i][j] == x.vertex) return DesignTube::make_round(segment(i, 0, leg_length(i) - static_cast<int>(j)));
        throw InputError("vertex outside the octopus presentation");
    }
    if (!x.round.contains(p.head)) {
        auto [i, j, k] = *leg_interval(p.legs, x.round);
        const int ni = leg_length(i);
        if (j == 0) return DesignTube::make_square(p.legs[i][static_cast<std::size_t>(ni - k)]);
        return DesignTube::make_round(segment(i, ni + 1 - k, ni + 1 - j));
    }
    VertexSet out = octopus.empty_set();
    out.insert(p.head);
    auto k = prefix_lengths(p.legs, x.round);
    for (std::size_t i = 0; i < p.legs.size(); ++i) out |= segment(i, 0, leg_length(i) - 1 - k[i]);
    return DesignTube::make_round(out);
}

}  // namespace nestfan
