#include "nestfan/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace nestfan {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<int> members) : bits_(universe) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::from_members(std::size_t universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
}

int VertexSet::first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? -1 : static_cast<int>(p);
}

int VertexSet::next(int v) const {
    auto p = bits_.find_next(static_cast<std::size_t>(v));
    return p == Bits::npos ? -1 : static_cast<int>(p);
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
}

bool VertexSet::operator<(const VertexSet& o) const {
    std::size_t a = size(), b = o.size();
    if (a != b) return a < b;
    int x = first(), y = o.first();
    while (x >= 0 && y >= 0) {
        if (x != y) return x < y;
        x = next(x);
        y = o.next(y);
    }
    return universe() < o.universe();
}

std::size_t VertexSet::hash() const {
    std::size_t h = bits_.size() * 0x9e3779b97f4a7c15ULL;
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(bits_, std::back_inserter(blocks));
    for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw InputError("empty vertex label");
        if (!seen.insert(l).second) throw InputError("duplicate vertex label: " + l);
    }
    const std::size_t n = labels_.size();
    adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop at " + labels_[static_cast<std::size_t>(u)]);
        if (adj_[static_cast<std::size_t>(u)].contains(v))
            throw InputError("parallel edge " + labels_[static_cast<std::size_t>(u)] + "-" +
                             labels_[static_cast<std::size_t>(v)]);
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }
}

int Graph::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw InputError("unknown vertex label: " + label);
    return static_cast<int>(it - labels_.begin());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < num_vertices(); ++u)
        for (int v = adj_[u].next(static_cast<int>(u)); v >= 0; v = adj_[u].next(v))
            out.emplace_back(static_cast<int>(u), v);
    return out;
}

VertexSet Graph::set_of(std::initializer_list<int> members) const { return VertexSet(num_vertices(), members); }

VertexSet Graph::set_of_labels(const std::vector<std::string>& labels) const {
    VertexSet s(num_vertices());
    for (const auto& l : labels) s.insert(index_of(l));
    return s;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    VertexSet out(num_vertices());
    for (int v = s.first(); v >= 0; v = s.next(v)) out |= adj_[static_cast<std::size_t>(v)];
    return out - s;
}

static VertexSet reach(const Graph& g, const VertexSet& within, int start) {
    VertexSet seen(g.num_vertices());
    seen.insert(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        VertexSet fresh = (g.neighbors(u) & within) - seen;
        for (int w = fresh.first(); w >= 0; w = fresh.next(w)) {
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen;
}

bool is_tube(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    return reach(g, s, s.first()) == s;
}

std::vector<VertexSet> components_of(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    VertexSet rest = s;
    while (!rest.empty()) {
        VertexSet c = reach(g, rest, rest.first());
        rest -= c;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return components_of(g, g.all()); }

int nested_dimension(const Graph& g) {
    return static_cast<int>(g.num_vertices()) - static_cast<int>(connected_components(g).size());
}

bool is_proper_tube(const Graph& g, const VertexSet& s) {
    if (!is_tube(g, s)) return false;
    return !(g.neighborhood(s).empty());
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> keep = s.members();
    std::vector<int> pos(g.num_vertices(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        labels.push_back(g.label(keep[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v))
            edges.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return Graph(std::move(labels), edges);
}

Graph reconnected_complement(const Graph& g, const Tube& t) {
    if (!is_tube(g, t)) throw InputError("reconnected complement requires a tube");
    VertexSet rest = t.complement();
    VertexSet touching = g.neighborhood(t);
    std::vector<int> keep = rest.members();
    std::vector<std::string> labels;
    for (int v : keep) labels.push_back(g.label(v));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            int u = keep[i], v = keep[j];
            if (g.adjacent(u, v) || (touching.contains(u) && touching.contains(v)))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(std::move(labels), edges);
}

Graph link_graph(const Graph& g, const Tube& t) {
    if (!is_tube(g, t)) throw InputError("link graph requires a tube");
    VertexSet touching = g.neighborhood(t);
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(g.num_vertices());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool in_u = t.contains(u), in_v = t.contains(v);
            if (in_u != in_v) continue;
            if (g.adjacent(u, v) || (!in_u && touching.contains(u) && touching.contains(v)))
                edges.emplace_back(u, v);
        }
    return Graph(g.labels(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    auto edges = a.edges();
    int shift = static_cast<int>(a.num_vertices());
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(std::move(labels), edges);
}

static std::string num(int i) { return std::to_string(i); }

Graph make_family(Family kind, const std::vector<int>& sizes) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    auto single = [&]() {
        if (sizes.size() != 1) throw InputError("family expects a single size");
        if (sizes[0] <= 0) throw InputError("family size must be positive");
        return sizes[0];
    };
    switch (kind) {
    case Family::path: {
        int m = single();
        for (int i = 1; i <= m; ++i) labels.push_back(num(i));
        for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
        break;
    }
    case Family::cycle: {
        int m = single();
        if (m < 3) throw InputError("cycle needs at least 3 vertices");
        for (int i = 1; i <= m; ++i) labels.push_back(num(i));
        for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
        break;
    }
    case Family::complete: {
        int m = single();
        for (int i = 1; i <= m; ++i) labels.push_back(num(i));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
        break;
    }
    case Family::star: {
        int m = single();
        labels.push_back("*");
        for (int i = 1; i < m; ++i) {
            labels.push_back("l" + num(i));
            edges.emplace_back(0, i);
        }
        break;
    }
    case Family::spider:
    case Family::octopus: {
        if (sizes.empty()) throw InputError("spider/octopus needs at least one leg");
        for (int s : sizes)
            if (s < 0) throw InputError("leg sizes must be non-negative");
        if (kind == Family::octopus) labels.push_back("*");
        std::vector<int> feet;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            int start = static_cast<int>(labels.size());
            feet.push_back(start);
            for (int j = 0; j <= sizes[i]; ++j) {
                labels.push_back("v^" + num(static_cast<int>(i) + 1) + "_" + num(j));
                if (j > 0) edges.emplace_back(start + j - 1, start + j);
            }
        }
        if (kind == Family::spider) {
            for (std::size_t a = 0; a < feet.size(); ++a)
                for (std::size_t b = a + 1; b < feet.size(); ++b) edges.emplace_back(feet[a], feet[b]);
        } else {
            for (int f : feet) edges.emplace_back(0, f);
        }
        break;
    }
    }
    return Graph(std::move(labels), edges);
}

static Graph parse_single(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("family spec needs 'kind:sizes': " + spec);
    std::string kind = spec.substr(0, colon);
    std::vector<int> sizes;
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InputError("empty size in family spec: " + spec);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InputError("bad size in family spec: " + spec);
        }
        if (used != item.size()) throw InputError("bad size in family spec: " + spec);
        sizes.push_back(v);
    }
    if (sizes.empty()) throw InputError("missing sizes in family spec: " + spec);
    if (kind == "path") return make_family(Family::path, sizes);
    if (kind == "cycle") return make_family(Family::cycle, sizes);
    if (kind == "complete") return make_family(Family::complete, sizes);
    if (kind == "star") return make_family(Family::star, sizes);
    if (kind == "spider") return make_family(Family::spider, sizes);
    if (kind == "octopus") return make_family(Family::octopus, sizes);
    throw InputError("unknown graph family: " + kind);
}

Graph parse_family(const std::string& spec) {
    if (spec.find('+') == std::string::npos) return parse_single(spec);
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, '+')) parts.push_back(item);
    Graph out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Graph part = parse_single(parts[i]);
        std::vector<std::string> labels;
        std::string prefix(1, static_cast<char>('a' + i));
        for (const auto& l : part.labels()) labels.push_back(prefix + "." + l);
        Graph renamed(labels, part.edges());
        out = i == 0 ? renamed : disjoint_union(out, renamed);
    }
    return out;
}

std::vector<std::string> set_labels(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out;
    for (int v = s.first(); v >= 0; v = s.next(v)) out.push_back(g.label(v));
    return out;
}

std::string set_to_string(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    }
    return out + "}";
}

VertexSet transport(const Graph& from, const Graph& to, const VertexSet& s) {
    VertexSet out(to.num_vertices());
    for (int v = s.first(); v >= 0; v = s.next(v)) out.insert(to.index_of(from.label(v)));
    return out;
}

}  // namespace nestfan
