#include "nestfan/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nestfan {

std::string to_string(WeightSearch::Outcome o) {
    switch (o) {
    case WeightSearch::Outcome::feasible: return "feasible";
    case WeightSearch::Outcome::infeasible: return "lp-infeasible";
    case WeightSearch::Outcome::invalid_fan: return "invalid-fan";
    }
    return "invalid-fan";
}

Rational flip_row_value(const FlipRecord& rec, const RatVector& weights) {
    Rational s = 0;
    for (std::size_t i = 0; i < rec.rays.size(); ++i) s += Rational(rec.coeffs[i]) * weights[static_cast<std::size_t>(rec.rays[i])];
    return s;
}

bool weights_satisfy_flips(const FanReport& rep, const RatVector& weights) {
    for (const auto& rec : rep.flips)
        if (!rec.separating || sgn(flip_row_value(rec, weights)) <= 0) return false;
    return true;
}

WeightSearch find_weights_lp(const Fan& f) { return find_weights_lp(f, verify_fan(f)); }

WeightSearch find_weights_lp(const Fan& f, const FanReport& rep) {
    WeightSearch out;
    if (!rep.ok) return out;
    const std::size_t n = f.rays.size();
    // ω = 1 + y with y >= 0.
    RatMatrix rows;
    RatVector rhs;
    for (const auto& rec : rep.flips) {
        RatVector row(n);
        Rational total = 0;
        for (std::size_t i = 0; i < rec.rays.size(); ++i) {
            row[static_cast<std::size_t>(rec.rays[i])] += Rational(rec.coeffs[i]);
            total += Rational(rec.coeffs[i]);
        }
        rows.push_back(std::move(row));
        rhs.push_back(1 - total);
    }
    LpResult r = simplex_nonneg(rows, rhs, RatVector(n, Rational(1)));
    if (!r.ok()) {
        out.outcome = WeightSearch::Outcome::infeasible;
        return out;
    }
    out.outcome = WeightSearch::Outcome::feasible;
    for (const auto& y : r.x) out.weights.push_back(1 + y);
    return out;
}

namespace {

enum class PathOrCycle { path, cycle };

PathOrCycle classify(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0 || connected_components(g).size() != 1) throw InputError("expected a path or a cycle");
    std::size_t edges = g.edges().size();
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<int>(v)) > 2) throw InputError("expected a path or a cycle");
    if (edges + 1 == n) return PathOrCycle::path;
    if (edges == n && n >= 3) return PathOrCycle::cycle;
    throw InputError("expected a path or a cycle");
}

}  // namespace

std::optional<RatVector> path_cycle_weights(const Graph& g, const Fan& f, const FanReport& rep) {
    PathOrCycle kind = classify(g);
    if (f.supports.size() != f.rays.size() || !f.base_cone) throw InputError("path_cycle_weights needs a compatibility fan");
    const long n = static_cast<long>(g.num_vertices());
    const long m = n + 1;
    std::vector<char> initial(f.rays.size(), 0);
    for (int r : f.cones[static_cast<std::size_t>(*f.base_cone)]) initial[static_cast<std::size_t>(r)] = 1;

    RatVector w(f.rays.size());
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        if (initial[r]) continue;
        long k = static_cast<long>(f.supports[r].size());
        Rational value(k * (2 * m - k));
        if (kind == PathOrCycle::cycle && f.kind == FanKind::dual && k == n - 1) value /= 2;
        w[r] = value;
    }
    // Each row reads A + B·Ω with B the total coefficient on initial rays.
    Int omega = 1;
    std::vector<std::pair<Rational, Rational>> rows;
    for (const auto& rec : rep.flips) {
        Rational a = 0, b = 0;
        for (std::size_t i = 0; i < rec.rays.size(); ++i) {
            std::size_t r = static_cast<std::size_t>(rec.rays[i]);
            if (initial[r]) b += Rational(rec.coeffs[i]);
            else a += Rational(rec.coeffs[i]) * w[r];
        }
        rows.emplace_back(a, b);
        if (sgn(b) > 0 && sgn(a + b * Rational(omega)) <= 0) {
            Rational bound = -a / b;
            Int need = bound.get_num() / bound.get_den() + 1;
            if (need > omega) omega = need;
        }
    }
    for (std::size_t r = 0; r < w.size(); ++r)
        if (initial[r]) w[r] = Rational(omega);
    for (const auto& [a, b] : rows)
        if (sgn(a + b * Rational(omega)) <= 0) return std::nullopt;
    if (!weights_satisfy_flips(rep, w)) return std::nullopt;
    return w;
}

static std::vector<std::string> cone_tag(const Fan& f, const std::vector<int>& cone) {
    std::vector<std::string> tag;
    for (int r : cone) tag.push_back(f.ray_keys[static_cast<std::size_t>(r)]);
    std::sort(tag.begin(), tag.end());
    return tag;
}

Polytope realize_polytope(const Fan& f, const RatVector& weights) {
    if (weights.size() != f.rays.size()) throw InputError("one weight per ray expected");
    RatMatrix w = working_rays(f);
    Polytope p;
    p.dimension = f.dimension;
    p.facet_keys = f.ray_keys;
    p.normals = w;
    p.offsets = weights;
    for (const auto& cone : f.cones) {
        RatMatrix a;
        RatVector b;
        for (int r : cone) {
            a.push_back(w[static_cast<std::size_t>(r)]);
            b.push_back(weights[static_cast<std::size_t>(r)]);
        }
        auto x = solve_square(a, b);
        if (!x) throw InputError("singular cone in realize_polytope");
        p.vertices.push_back(std::move(*x));
        p.vertex_tags.push_back(cone_tag(f, cone));
    }
    return p;
}

static Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool verify_normal_fan(const Polytope& p, const Fan& f, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    RatMatrix w = working_rays(f);
    std::map<std::string, std::size_t> facet;
    for (std::size_t i = 0; i < p.facet_keys.size(); ++i) facet[p.facet_keys[i]] = i;
    if (facet.size() != f.ray_keys.size()) return fail("facet count differs from ray count");
    for (std::size_t r = 0; r < f.ray_keys.size(); ++r) {
        auto it = facet.find(f.ray_keys[r]);
        if (it == facet.end()) return fail("no facet for ray " + f.ray_keys[r]);
        if (p.normals[it->second] != w[r]) return fail("facet normal differs from ray " + f.ray_keys[r]);
    }
    std::map<std::vector<std::string>, std::size_t> vertex;
    for (std::size_t i = 0; i < p.vertex_tags.size(); ++i) vertex[p.vertex_tags[i]] = i;
    if (vertex.size() != f.cones.size() || p.vertices.size() != f.cones.size()) return fail("vertex count differs from cone count");
    for (const auto& cone : f.cones) {
        auto it = vertex.find(cone_tag(f, cone));
        if (it == vertex.end()) return fail("no vertex for a cone");
        const RatVector& x = p.vertices[it->second];
        std::set<int> own(cone.begin(), cone.end());
        for (std::size_t r = 0; r < w.size(); ++r) {
            std::size_t fi = facet[f.ray_keys[r]];
            int s = sgn(dot(p.normals[fi], x) - p.offsets[fi]);
            bool tight = own.count(static_cast<int>(r)) > 0;
            if (tight ? s != 0 : s >= 0)
                return fail("vertex " + std::to_string(it->second) + (tight ? " not tight on " : " not strict on ") + f.ray_keys[r]);
        }
    }
    return true;
}

Int star_offset(int n, int k) { return Int((n + k) * (n + 1 - k) / 2); }

Polytope star_polytope(int n) {
    if (n < 1) throw InputError("star_polytope needs n >= 1");
    Graph g = make_family(Family::star, {n + 1});
    std::vector<Tube> leaves;
    for (int i = 1; i <= n; ++i) leaves.push_back(g.set_of({i}));
    Tubing initial = make_tubing(leaves);
    Polytope p;
    p.dimension = n;
    for (const auto& t : enumerate_tubes(g)) {
        p.facet_keys.push_back(set_to_string(g, t));
        p.normals.push_back(to_rat_vector(compat_vector(g, initial, t, Mode::primal)));
        p.offsets.push_back(t.contains(0) ? Rational(star_offset(n, static_cast<int>(t.size()))) : Rational(0));
    }
    for (const auto& tubing : enumerate_maximal_tubings(g)) {
        RatVector x(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            std::size_t best = g.num_vertices();
            for (const auto& t : tubing)
                if (t.contains(i)) best = std::min(best, t.size());
            x[static_cast<std::size_t>(i - 1)] = Rational(static_cast<long>(best) - 1);
        }
        p.vertices.push_back(std::move(x));
        std::vector<std::string> tag;
        for (const auto& t : tubing) tag.push_back(set_to_string(g, t));
        std::sort(tag.begin(), tag.end());
        p.vertex_tags.push_back(std::move(tag));
    }
    return p;
}

bool star_double_description(const Polytope& p) {
    const std::size_t n = static_cast<std::size_t>(p.dimension);
    const std::size_t m = p.normals.size();
    auto inside = [&](const RatVector& x) {
        for (std::size_t i = 0; i < m; ++i)
            if (dot(p.normals[i], x) > p.offsets[i]) return false;
        return true;
    };
    std::set<RatVector> given(p.vertices.begin(), p.vertices.end());
    for (const auto& v : given)
        if (!inside(v)) return false;
    std::set<RatVector> found;
    std::vector<std::size_t> pick(n);
    // Lexicographic n-subsets of [m].
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    if (n > m) return false;
    while (true) {
        RatMatrix a;
        RatVector b;
        for (std::size_t i : pick) {
            a.push_back(p.normals[i]);
            b.push_back(p.offsets[i]);
        }
        if (auto x = solve_square(a, b); x && inside(*x)) found.insert(*x);
        std::size_t k = n;
        while (k > 0 && pick[k - 1] == m - n + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return found == given;
}

}  // namespace nestfan
