#include "nestfan/compat.hpp"

namespace nestfan {

int degree(const Graph& g, const Tube& t, const Tube& t_prime) {
    if (t == t_prime) return -1;
    if (t.is_subset_of(t_prime)) return 0;
    return static_cast<int>((g.neighborhood(t) & (t_prime - t)).size());
}

CompatVector compat_vector(const Graph& g, const Tubing& initial, const Tube& t, Mode mode) {
    CompatVector v;
    v.reserve(initial.size());
    for (const auto& s : initial) v.push_back(mode == Mode::primal ? degree(g, s, t) : degree(g, t, s));
    return v;
}

CompatMatrix compat_matrix(const Graph& g, const Tubing& initial, const Tubing& t, Mode mode) {
    CompatMatrix m(initial.size(), std::vector<int>(t.size()));
    for (std::size_t j = 0; j < t.size(); ++j) {
        auto col = compat_vector(g, initial, t[j], mode);
        for (std::size_t i = 0; i < initial.size(); ++i) m[i][j] = col[i];
    }
    return m;
}

bool DesignTube::operator==(const DesignTube& o) const {
    if (square != o.square) return false;
    return square ? vertex == o.vertex : round == o.round;
}

bool DesignTube::operator<(const DesignTube& o) const {
    if (square != o.square) return square;
    if (square) return vertex < o.vertex;
    return round < o.round;
}

std::size_t DesignTube::hash() const {
    return square ? std::hash<int>{}(vertex) * 31u + 7u : round.hash();
}

std::string design_tube_to_string(const Graph& g, const DesignTube& t) {
    if (t.square) return "|" + g.label(t.vertex) + "|";
    return set_to_string(g, t.round);
}

bool design_nested(const DesignTube& a, const DesignTube& b) {
    if (a.square && b.square) return a.vertex == b.vertex;
    if (a.square) return b.round.contains(a.vertex);
    if (b.square) return a.round.contains(b.vertex);
    return a.round.is_subset_of(b.round) || b.round.is_subset_of(a.round);
}

bool design_compatible(const Graph& g, const DesignTube& a, const DesignTube& b) {
    if (a == b) return true;
    if (a.square || b.square) return !design_nested(a, b);
    return are_compatible(g, a.round, b.round);
}

int design_degree(const Graph& g, const DesignTube& a, const DesignTube& b) {
    if (a == b) return -1;
    if (a.square != b.square) return design_nested(a, b) ? 1 : 0;
    if (!a.square) return degree(g, a.round, b.round);
    return 0;
}

CompatVector design_compat_vector(const Graph& g, const DesignTubing& initial, const DesignTube& t, Mode mode) {
    CompatVector v;
    v.reserve(initial.size());
    for (const auto& s : initial) v.push_back(mode == Mode::primal ? design_degree(g, s, t) : design_degree(g, t, s));
    return v;
}

}  // namespace nestfan
