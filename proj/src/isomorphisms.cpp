#include "nestfan/isomorphisms.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace nestfan {

std::vector<Permutation> graph_automorphisms(const Graph& g) {
    const int n = static_cast<int>(g.num_vertices());
    std::vector<Permutation> out;
    Permutation perm(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void(int)> extend = [&](int v) {
        if (v == n) {
            out.push_back(perm);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || g.degree(v) != g.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == g.adjacent(perm[static_cast<std::size_t>(u)], w);
            if (!ok) continue;
            perm[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            extend(v + 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
        perm[static_cast<std::size_t>(v)] = -1;
    };
    extend(0);
    return out;
}

Tube apply_permutation(const Permutation& perm, const Tube& t) {
    Tube out(t.universe());
    for (int v : t.members()) out.insert(perm[static_cast<std::size_t>(v)]);
    return out;
}

Tubing apply_permutation(const Permutation& perm, const Tubing& t) {
    std::vector<Tube> out;
    for (const auto& tube : t) out.push_back(apply_permutation(perm, tube));
    return make_tubing(std::move(out));
}

namespace {

// Orbits of a set of tubings under the group generated by tube maps.
std::size_t count_orbits(const std::vector<Tubing>& tubings, const std::vector<std::function<Tube(const Tube&)>>& generators) {
    std::unordered_set<Tubing, TubingHash> seen;
    std::size_t orbits = 0;
    for (const auto& start : tubings) {
        if (seen.count(start)) continue;
        ++orbits;
        std::deque<Tubing> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            Tubing cur = std::move(queue.front());
            queue.pop_front();
            for (const auto& gen : generators) {
                std::vector<Tube> img;
                for (const auto& t : cur) img.push_back(gen(t));
                Tubing next = make_tubing(std::move(img));
                if (seen.insert(next).second) queue.push_back(std::move(next));
            }
        }
    }
    return orbits;
}

}  // namespace

std::size_t tubing_orbit_count(const Graph& g) {
    std::vector<std::function<Tube(const Tube&)>> gens;
    for (const auto& p : graph_automorphisms(g)) gens.push_back([p](const Tube& t) { return apply_permutation(p, t); });
    return count_orbits(enumerate_maximal_tubings(g), gens);
}

std::size_t path_dihedral_orbit_count(int n) {
    Graph g = make_family(Family::path, {n + 1});
    std::vector<std::function<Tube(const Tube&)>> gens{
        [&g](const Tube& t) { return path_rotation(g, 1, t); },
        [&g](const Tube& t) { return path_reversal(g, t); },
    };
    return count_orbits(enumerate_maximal_tubings(g), gens);
}

std::vector<int> connected_size_partition(const Graph& g) {
    std::vector<int> sizes;
    for (const auto& c : connected_components(g)) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
    auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!g.adjacent(m[i], m[j])) return false;
    return true;
}

// Orders the vertices of an induced path component starting from `end`.
std::optional<std::vector<int>> walk_path(const Graph& g, const VertexSet& comp, int end) {
    std::vector<int> order{end};
    int prev = -1, cur = end;
    while (true) {
        VertexSet next = g.neighbors(cur) & comp;
        if (prev >= 0) next.erase(prev);
        if (next.size() > 1) return std::nullopt;
        if (next.empty()) break;
        prev = cur;
        cur = next.first();
        order.push_back(cur);
    }
    if (order.size() != comp.size()) return std::nullopt;
    return order;
}

// Legs hanging from `body`, or nullopt if the rest is not a set of properly attached paths.
std::optional<SpiderPresentation> legs_for_body(const Graph& g, const VertexSet& body) {
    std::map<int, std::vector<int>> leg;
    for (int b : body.members()) leg[b] = {b};
    for (const auto& comp : components_of(g, g.all() - body)) {
        int attach = -1, foot = -1, links = 0;
        for (int v : comp.members())
            for (int b : (g.neighbors(v) & body).members()) {
                ++links;
                attach = b;
                foot = v;
            }
        if (links != 1 || leg[attach].size() > 1) return std::nullopt;
        if ((g.neighbors(foot) & comp).size() > 1) return std::nullopt;
        auto order = walk_path(g, comp, foot);
        if (!order) return std::nullopt;
        leg[attach].insert(leg[attach].end(), order->begin(), order->end());
    }
    SpiderPresentation p;
    for (auto& [b, l] : leg) p.legs.push_back(std::move(l));
    return p;
}

}  // namespace

std::vector<SpiderPresentation> spider_presentations(const Graph& g) {
    std::vector<SpiderPresentation> out;
    if (g.num_vertices() == 0 || connected_components(g).size() != 1) return out;
    const int n = static_cast<int>(g.num_vertices());
    std::function<void(int, VertexSet&)> grow = [&](int from, VertexSet& clique) {
        if (!clique.empty())
            if (auto p = legs_for_body(g, clique)) out.push_back(std::move(*p));
        for (int v = from; v < n; ++v) {
            if (!(clique.is_subset_of(g.neighbors(v)))) continue;
            clique.insert(v);
            grow(v + 1, clique);
            clique.erase(v);
        }
    };
    VertexSet clique = g.empty_set();
    grow(0, clique);
    return out;
}

std::optional<std::pair<int, int>> parse_leg_label(const std::string& l) {
    auto under = l.find('_');
    if (l.rfind("v^", 0) != 0 || under == std::string::npos || under < 3 || under + 1 >= l.size()) return std::nullopt;
    auto digits = [](const std::string& s) { return !s.empty() && s.size() < 9 && std::all_of(s.begin(), s.end(), ::isdigit); };
    std::string a = l.substr(2, under - 2), b = l.substr(under + 1);
    if (!digits(a) || !digits(b)) return std::nullopt;
    int i = std::stoi(a), j = std::stoi(b);
    if (i < 1) return std::nullopt;
    return std::make_pair(i, j);
}

std::optional<SpiderPresentation> presentation_from_labels(const Graph& g) {
    std::map<int, std::map<int, int>> at;
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
        auto ij = parse_leg_label(g.label(v));
        if (!ij || !at[ij->first].emplace(ij->second, v).second) return std::nullopt;
    }
    SpiderPresentation p;
    int expected = 1;
    for (auto& [i, leg] : at) {
        if (i != expected++) return std::nullopt;
        std::vector<int> order;
        int expected_j = 0;
        for (auto& [j, v] : leg) {
            if (j != expected_j++) return std::nullopt;
            order.push_back(v);
        }
        p.legs.push_back(std::move(order));
    }
    VertexSet body = g.empty_set();
    std::size_t edges = 0;
    for (const auto& leg : p.legs) {
        body.insert(leg[0]);
        for (std::size_t j = 1; j < leg.size(); ++j) {
            if (!g.adjacent(leg[j - 1], leg[j])) return std::nullopt;
            ++edges;
        }
    }
    if (!is_clique(g, body)) return std::nullopt;
    edges += body.size() * (body.size() - 1) / 2;
    if (edges != g.edges().size()) return std::nullopt;
    return p;
}

Tube spider_omega(const Graph& g, const SpiderPresentation& p, const Tube& t) {
    if (!is_tube(g, t)) throw InputError("not a tube: " + set_to_string(g, t));
    std::vector<std::pair<int, int>> pos(g.num_vertices(), {-1, -1});
    for (std::size_t i = 0; i < p.legs.size(); ++i)
        for (std::size_t j = 0; j < p.legs[i].size(); ++j)
            pos[static_cast<std::size_t>(p.legs[i][j])] = {static_cast<int>(i), static_cast<int>(j)};
    Tube out = g.empty_set();
    bool body = false;
    for (const auto& leg : p.legs) body = body || t.contains(leg[0]);
    if (!body) {
        auto m = t.members();
        auto [i, j] = pos[static_cast<std::size_t>(m.front())];
        int k = j;
        for (int v : m) {
            j = std::min(j, pos[static_cast<std::size_t>(v)].second);
            k = std::max(k, pos[static_cast<std::size_t>(v)].second);
        }
        const auto& leg = p.legs[static_cast<std::size_t>(i)];
        const int ni = p.leg_length(static_cast<std::size_t>(i));
        for (int x = ni + 1 - k; x <= ni + 1 - j; ++x) out.insert(leg[static_cast<std::size_t>(x)]);
        return out;
    }
    for (std::size_t i = 0; i < p.legs.size(); ++i) {
        const auto& leg = p.legs[i];
        int k = -1;
        while (k + 1 < static_cast<int>(leg.size()) && t.contains(leg[static_cast<std::size_t>(k + 1)])) ++k;
        int image = p.leg_length(i) - 1 - k;
        for (int x = 0; x <= image; ++x) out.insert(leg[static_cast<std::size_t>(x)]);
    }
    return out;
}

Tube spider_omega(const Graph& g, const Tube& t) {
    if (auto p = presentation_from_labels(g)) return spider_omega(g, *p, t);
    auto all = spider_presentations(g);
    if (all.empty()) throw InputError("not a spider");
    return spider_omega(g, all.front(), t);
}

bool spider_dual_is_primal(const Graph& g, const SpiderPresentation& p, const ComplexData& data,
                           const Tubing& initial, std::string* why) {
    std::map<std::string, std::string> omega;
    for (const auto& t : data.tubes) omega[set_to_string(g, t)] = set_to_string(g, spider_omega(g, p, t));
    std::vector<Tube> image;
    for (const auto& t : initial) image.push_back(spider_omega(g, p, t));
    Fan dual = build_fan(g, data, initial, Mode::dual);
    Fan primal = build_fan(g, data, make_tubing(std::move(image)), Mode::primal);
    auto rename = [&omega](const std::string& k) { return omega.at(k); };
    return fans_equal(dual, relabel(primal, rename, rename), why);
}

namespace {

std::pair<int, int> interval_of(const Graph& path, const Tube& t) {
    const int n = static_cast<int>(path.num_vertices()) - 1;
    for (int v = 0; v < n; ++v)
        if (!path.adjacent(v, v + 1)) throw InputError("expected a path with vertices in order");
    if (path.edges().size() != static_cast<std::size_t>(n)) throw InputError("expected a path");
    if (!is_proper_tube(path, t)) throw InputError("not a proper tube of the path");
    auto m = t.members();
    return {m.front() + 1, m.back() + 1};
}

Tube interval(const Graph& path, int j, int k) {
    Tube t = path.empty_set();
    for (int v = j; v <= k; ++v) t.insert(v - 1);
    return t;
}

}  // namespace

Tube path_rotation(const Graph& path, int power, const Tube& t) {
    const int n = static_cast<int>(path.num_vertices()) - 1;
    auto [j, k] = interval_of(path, t);
    power %= n + 3;
    if (power < 0) power += n + 3;
    for (int s = 0; s < power; ++s) {
        if (j == 1) {
            j = k + 1;
            k = n + 1;
        } else {
            --j;
            --k;
        }
    }
    return interval(path, j, k);
}

Tube path_reversal(const Graph& path, const Tube& t) {
    const int n = static_cast<int>(path.num_vertices()) - 1;
    auto [j, k] = interval_of(path, t);
    return interval(path, n + 2 - k, n + 2 - j);
}

std::vector<Graph> connected_graph_catalog(int n) {
    if (n < 1 || n > 6) throw InputError("graph catalog supports 1..6 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::map<std::pair<int, int>, int> bit;
    for (std::size_t i = 0; i < pairs.size(); ++i) bit[pairs[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> edge_images;
    Permutation perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<int> img;
        for (auto [u, v] : pairs) {
            int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
            img.push_back(bit[{std::min(a, b), std::max(a, b)}]);
        }
        edge_images.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    const std::uint32_t masks = 1u << pairs.size();
    std::vector<char> seen(masks, 0);
    std::vector<Graph> out;
    // Ascending scan: the first unseen mask of an orbit is its minimum.
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        if (seen[mask]) continue;
        for (const auto& img : edge_images) {
            std::uint32_t m = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1u) m |= 1u << img[e];
            seen[m] = 1;
        }
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1u) edges.push_back(pairs[e]);
        Graph g(labels, edges);
        if (connected_components(g).size() == 1) out.push_back(std::move(g));
    }
    return out;
}

bool primal_dual_collinear(const Graph& g, const Tubing& initial) {
    for (const auto& t : enumerate_tubes(g)) {
        auto c = compat_vector(g, initial, t, Mode::primal);
        auto d = compat_vector(g, initial, t, Mode::dual);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (c[i] * d[j] != c[j] * d[i]) return false;
    }
    return true;
}

bool is_octopus_with_head(const Graph& g, int head) {
    VertexSet h = g.empty_set();
    h.insert(head);
    for (const auto& comp : components_of(g, g.all() - h)) {
        int links = 0, foot = -1;
        for (int v : comp.members())
            if (g.adjacent(v, head)) {
                ++links;
                foot = v;
            }
        if (links != 1 || (g.neighbors(foot) & comp).size() > 1 || !walk_path(g, comp, foot)) return false;
    }
    return true;
}

}  // namespace nestfan
