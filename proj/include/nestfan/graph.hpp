#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nestfan {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value-semantic vertex subset over indices 0..n-1.
class VertexSet {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe) {}
    VertexSet(std::size_t universe, std::initializer_list<int> members);
    static VertexSet from_members(std::size_t universe, const std::vector<int>& members);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(int v) const { return bits_.test(static_cast<std::size_t>(v)); }
    void insert(int v) { bits_.set(static_cast<std::size_t>(v)); }
    void erase(int v) { bits_.reset(static_cast<std::size_t>(v)); }

    // Smallest member, or -1 when empty.
    int first() const;
    // Next member after v, or -1.
    int next(int v) const;
    std::vector<int> members() const;

    bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool is_proper_subset_of(const VertexSet& o) const { return bits_.is_proper_subset_of(o.bits_); }
    bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }

    VertexSet operator|(const VertexSet& o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator-(const VertexSet& o) const { return VertexSet(bits_ - o.bits_); }
    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }
    VertexSet complement() const { return VertexSet(~bits_); }

    bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return bits_ != o.bits_; }
    // Canonical order: by cardinality, then lexicographically on sorted members.
    bool operator<(const VertexSet& o) const;

    std::size_t hash() const;
    const Bits& bits() const { return bits_; }

private:
    explicit VertexSet(Bits b) : bits_(std::move(b)) {}
    Bits bits_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

using Tube = VertexSet;

// Immutable simple undirected graph with labeled vertices.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

    std::size_t num_vertices() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    int index_of(const std::string& label) const;

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    std::vector<std::pair<int, int>> edges() const;

    VertexSet empty_set() const { return VertexSet(num_vertices()); }
    VertexSet all() const { return VertexSet::full(num_vertices()); }
    VertexSet set_of(std::initializer_list<int> members) const;
    VertexSet set_of_labels(const std::vector<std::string>& labels) const;

    // Vertices outside s adjacent to some vertex of s.
    VertexSet neighborhood(const VertexSet& s) const;

    bool operator==(const Graph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
};

bool is_tube(const Graph& g, const VertexSet& s);
// Connected components of the induced subgraph on s, sorted by smallest element.
std::vector<VertexSet> components_of(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);
// |V| - number of components.
int nested_dimension(const Graph& g);
bool is_proper_tube(const Graph& g, const VertexSet& s);

// Induced subgraph on s; vertex order inherited.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
// Graph on V \ t where uv is an edge iff uv or {u,v} ∪ t is connected in g.
Graph reconnected_complement(const Graph& g, const Tube& t);
// The disjoint union G[t] ⊔ G⋆t on the same vertex indices as g.
Graph link_graph(const Graph& g, const Tube& t);
Graph disjoint_union(const Graph& a, const Graph& b);

enum class Family { path, cycle, complete, star, spider, octopus };

Graph make_family(Family kind, const std::vector<int>& sizes);
// Parses "path:5", "cycle:4", "complete:3", "star:6", "spider:0,3,2", "octopus:1,1";
// parts joined with '+' build a disjoint union with part-prefixed labels.
Graph parse_family(const std::string& spec);

std::string set_to_string(const Graph& g, const VertexSet& s);
std::vector<std::string> set_labels(const Graph& g, const VertexSet& s);
// Embed s (indexed in sub, whose labels are a subset of g's) into g's indices.
VertexSet transport(const Graph& from, const Graph& to, const VertexSet& s);

}  // namespace nestfan
