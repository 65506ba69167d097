#include "nestfan/nested.hpp"

#include "nestfan/compat.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace nestfan {

std::size_t TubingHash::operator()(const Tubing& t) const {
    std::size_t h = t.size();
    for (const auto& tube : t) h ^= tube.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Tubing make_tubing(std::vector<Tube> tubes) {
    std::sort(tubes.begin(), tubes.end());
    tubes.erase(std::unique(tubes.begin(), tubes.end()), tubes.end());
    return tubes;
}

std::string tubing_to_string(const Graph& g, const Tubing& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += " ";
        out += set_to_string(g, t[i]);
    }
    return out + "]";
}

bool are_compatible(const Graph& g, const Tube& a, const Tube& b) {
    if (a.is_subset_of(b) || b.is_subset_of(a)) return true;
    if (a.intersects(b)) return false;
    return !g.neighborhood(a).intersects(b);
}

bool is_tubing(const Graph& g, const Tubing& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!is_proper_tube(g, t[i])) return false;
        if (i > 0 && !(t[i - 1] < t[i])) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!are_compatible(g, t[i], t[j])) return false;
    }
    return true;
}

bool is_maximal_tubing(const Graph& g, const Tubing& t) {
    return is_tubing(g, t) && static_cast<int>(t.size()) == nested_dimension(g);
}

static void grow(const Graph& g, VertexSet& s, VertexSet ext, VertexSet forbidden, std::vector<Tube>& out) {
    out.push_back(s);
    for (int w = ext.first(); w >= 0; w = ext.next(w)) {
        VertexSet next_ext = ((ext | g.neighbors(w)) - s - forbidden);
        next_ext.erase(w);
        s.insert(w);
        grow(g, s, next_ext, forbidden, out);
        s.erase(w);
        forbidden.insert(w);
    }
}

std::vector<Tube> enumerate_tubes(const Graph& g, bool include_improper) {
    std::vector<Tube> all;
    const int n = static_cast<int>(g.num_vertices());
    VertexSet below(g.num_vertices());
    for (int v = 0; v < n; ++v) {
        VertexSet s(g.num_vertices());
        s.insert(v);
        VertexSet forbidden = below;
        forbidden.insert(v);
        grow(g, s, g.neighbors(v) - forbidden, forbidden, all);
        below.insert(v);
    }
    std::vector<Tube> proper, improper;
    for (auto& t : all) (g.neighborhood(t).empty() ? improper : proper).push_back(std::move(t));
    std::sort(proper.begin(), proper.end());
    if (include_improper) {
        std::sort(improper.begin(), improper.end());
        proper.insert(proper.end(), improper.begin(), improper.end());
    }
    return proper;
}

static void extend_tubings(const Graph& g, const std::vector<Tube>& tubes,
                           const std::vector<std::vector<char>>& ok, std::vector<int>& chosen,
                           std::size_t from, std::optional<int> size, std::vector<Tubing>& out) {
    if (!size || static_cast<int>(chosen.size()) == *size) {
        Tubing t;
        for (int i : chosen) t.push_back(tubes[static_cast<std::size_t>(i)]);
        out.push_back(std::move(t));
        if (size) return;
    }
    for (std::size_t i = from; i < tubes.size(); ++i) {
        bool fits = true;
        for (int c : chosen)
            if (!ok[i][static_cast<std::size_t>(c)]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        chosen.push_back(static_cast<int>(i));
        extend_tubings(g, tubes, ok, chosen, i + 1, size, out);
        chosen.pop_back();
    }
}

std::vector<Tubing> enumerate_tubings(const Graph& g, std::optional<int> size) {
    auto tubes = enumerate_tubes(g);
    std::vector<std::vector<char>> ok(tubes.size(), std::vector<char>(tubes.size(), 0));
    for (std::size_t i = 0; i < tubes.size(); ++i)
        for (std::size_t j = 0; j < tubes.size(); ++j) ok[i][j] = are_compatible(g, tubes[i], tubes[j]);
    std::vector<Tubing> out;
    std::vector<int> chosen;
    if (size && *size < 0) return out;
    extend_tubings(g, tubes, ok, chosen, 0, size, out);
    std::sort(out.begin(), out.end());
    return out;
}

Tubing greedy_maximal_tubing(const Graph& g) {
    Tubing t;
    for (const auto& tube : enumerate_tubes(g)) {
        bool fits = std::all_of(t.begin(), t.end(), [&](const Tube& s) { return are_compatible(g, s, tube); });
        if (fits) t.push_back(tube);
    }
    return make_tubing(std::move(t));
}

std::vector<Tubing> enumerate_maximal_tubings(const Graph& g) {
    Tubing seed = greedy_maximal_tubing(g);
    std::unordered_set<Tubing, TubingHash> seen{seed};
    std::deque<Tubing> queue{seed};
    while (!queue.empty()) {
        Tubing cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& tube : cur) {
            FlipResult r = flip(g, cur, tube);
            if (seen.insert(r.tubing).second) queue.push_back(std::move(r.tubing));
        }
    }
    std::vector<Tubing> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tubing> enumerate_maximal_tubings_by_filter(const Graph& g) {
    return enumerate_tubings(g, nested_dimension(g));
}

int Spine::index_of(const Tube& t) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == t) return static_cast<int>(i);
    return -1;
}

int Spine::root(int node) const {
    const auto& l = lambda.at(static_cast<std::size_t>(node));
    if (l.size() != 1) throw InputError("root requires a singleton lambda set");
    return l.first();
}

Spine lambda_roots(const Graph& g, const Tubing& t) {
    Spine sp;
    sp.nodes = t;
    for (auto& c : connected_components(g)) sp.nodes.push_back(std::move(c));
    const std::size_t m = sp.nodes.size();
    sp.parent.assign(m, -1);
    sp.lambda.assign(m, VertexSet());
    for (std::size_t i = 0; i < m; ++i) {
        VertexSet covered(g.num_vertices());
        int best = -1;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (sp.nodes[j].is_proper_subset_of(sp.nodes[i])) covered |= sp.nodes[j];
            if (sp.nodes[i].is_proper_subset_of(sp.nodes[j]) &&
                (best < 0 || sp.nodes[j].size() < sp.nodes[static_cast<std::size_t>(best)].size()))
                best = static_cast<int>(j);
        }
        sp.parent[i] = best;
        sp.lambda[i] = sp.nodes[i] - covered;
    }
    return sp;
}

FlipResult flip(const Graph& g, const Tubing& t, const Tube& tube) {
    if (!is_maximal_tubing(g, t)) throw InputError("flip requires a maximal tubing");
    auto it = std::find(t.begin(), t.end(), tube);
    if (it == t.end()) throw InputError("flip: tube not in tubing");
    Spine sp = lambda_roots(g, t);
    int i = sp.index_of(tube);
    int p = sp.parent[static_cast<std::size_t>(i)];
    const Tube& bar = sp.nodes[static_cast<std::size_t>(p)];
    int bar_root = sp.root(p);
    Tube rest = bar - sp.lambda[static_cast<std::size_t>(i)];
    Tube t_prime;
    for (auto& c : components_of(g, rest))
        if (c.contains(bar_root)) t_prime = std::move(c);
    Tubing next;
    for (const auto& s : t)
        if (s != tube) next.push_back(s);
    next.push_back(t_prime);
    return {t_prime, make_tubing(std::move(next))};
}

static int unique_member(const VertexSet& s) { return s.size() == 1 ? s.first() : -1; }

std::optional<FlipContext> exchange_data(const Graph& g, const Tube& t, const Tube& t_prime) {
    if (t == t_prime) return std::nullopt;
    if (degree(g, t, t_prime) != 1 || degree(g, t_prime, t) != 1) return std::nullopt;
    FlipContext c;
    c.t = t;
    c.t_prime = t_prime;
    c.t_bar = t | t_prime;
    c.r = unique_member(g.neighborhood(t_prime) & (t - t_prime));
    c.r_prime = unique_member(g.neighborhood(t) & (t_prime - t));
    c.t_under_parts = components_of(g, t & t_prime);
    VertexSet a = t - t_prime;
    a.erase(c.r);
    VertexSet a_prime = t_prime - t;
    a_prime.erase(c.r_prime);
    c.a_parts = components_of(g, a);
    c.a_prime_parts = components_of(g, a_prime);
    c.t_bar_proper = !g.neighborhood(c.t_bar).empty();
    if (c.t_bar_proper) c.forced.push_back(c.t_bar);
    for (const auto* parts : {&c.t_under_parts, &c.a_parts, &c.a_prime_parts})
        c.forced.insert(c.forced.end(), parts->begin(), parts->end());
    std::sort(c.forced.begin(), c.forced.end());
    return c;
}

Tube link_split(const Graph& g, const Tube& t0, const Tube& s) {
    if (s == t0) throw InputError("link_split: tube equals the link tube");
    if (!are_compatible(g, t0, s)) throw InputError("link_split: tube not compatible with link tube");
    if (s.is_proper_subset_of(t0)) return s;
    return s - t0;
}

}  // namespace nestfan
