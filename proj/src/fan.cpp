#include "nestfan/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace nestfan {

std::string to_string(FanKind k) {
    switch (k) {
    case FanKind::primal: return "primal";
    case FanKind::dual: return "dual";
    case FanKind::design_primal: return "design_primal";
    case FanKind::design_dual: return "design_dual";
    case FanKind::nested: return "nested";
    case FanKind::product: return "product";
    case FanKind::custom: return "custom";
    }
    return "custom";
}

FanKind fan_kind_from_string(const std::string& s) {
    for (FanKind k : {FanKind::primal, FanKind::dual, FanKind::design_primal, FanKind::design_dual, FanKind::nested,
                      FanKind::product, FanKind::custom})
        if (to_string(k) == s) return k;
    throw InputError("unknown fan kind: " + s);
}

int Fan::ray_index(const std::string& key) const {
    auto it = std::find(ray_keys.begin(), ray_keys.end(), key);
    return it == ray_keys.end() ? -1 : static_cast<int>(it - ray_keys.begin());
}

int Fan::cone_index(const std::vector<int>& sorted_rays) const {
    auto it = std::find(cones.begin(), cones.end(), sorted_rays);
    return it == cones.end() ? -1 : static_cast<int>(it - cones.begin());
}

Int FlipRecord::coefficient(int ray) const {
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == ray) return coeffs.at(i);
    return Int(0);
}

int ComplexData::tube_index(const Tube& t) const {
    auto it = std::lower_bound(tubes.begin(), tubes.end(), t);
    return (it != tubes.end() && *it == t) ? static_cast<int>(it - tubes.begin()) : -1;
}

ComplexData complex_data(const Graph& g) {
    ComplexData d;
    d.tubes = enumerate_tubes(g);
    for (const auto& t : enumerate_maximal_tubings(g)) {
        std::vector<int> cone;
        for (const auto& tube : t) cone.push_back(d.tube_index(tube));
        std::sort(cone.begin(), cone.end());
        d.cones.push_back(std::move(cone));
    }
    return d;
}

static std::vector<std::string> tube_keys(const Graph& g, const std::vector<Tube>& tubes) {
    std::vector<std::string> out;
    for (const auto& t : tubes) out.push_back(set_to_string(g, t));
    return out;
}

Fan build_fan(const Graph& g, const Tubing& initial, Mode mode) { return build_fan(g, complex_data(g), initial, mode); }

Fan build_fan(const Graph& g, const ComplexData& data, const Tubing& initial, Mode mode) {
    if (!is_maximal_tubing(g, initial)) throw InputError("initial tubing must be maximal");
    Fan f;
    f.dimension = nested_dimension(g);
    f.kind = mode == Mode::primal ? FanKind::primal : FanKind::dual;
    f.vertex_labels = g.labels();
    f.coordinate_keys = tube_keys(g, initial);
    f.ray_keys = tube_keys(g, data.tubes);
    f.supports = data.tubes;
    for (const auto& t : data.tubes) f.rays.push_back(to_rat_vector(compat_vector(g, initial, t, mode)));
    f.cones = data.cones;
    std::vector<int> base;
    for (const auto& t : initial) base.push_back(data.tube_index(t));
    std::sort(base.begin(), base.end());
    f.base_cone = f.cone_index(base);
    return f;
}

Fan build_nested_fan(const Graph& g) { return build_nested_fan(g, complex_data(g)); }

Fan build_nested_fan(const Graph& g, const ComplexData& data) {
    Fan f;
    f.dimension = nested_dimension(g);
    f.kind = FanKind::nested;
    f.vertex_labels = g.labels();
    f.coordinate_keys = g.labels();
    f.ray_keys = tube_keys(g, data.tubes);
    f.supports = data.tubes;
    auto comps = connected_components(g);
    for (const auto& t : data.tubes) {
        RatVector v(g.num_vertices());
        for (const auto& w : comps) {
            Rational share(static_cast<long>((t & w).size()), static_cast<unsigned long>(w.size()));
            for (int x = w.first(); x >= 0; x = w.next(x)) v[static_cast<std::size_t>(x)] = (t.contains(x) ? 1 : 0) - share;
        }
        f.rays.push_back(std::move(v));
    }
    f.cones = data.cones;
    if (!f.cones.empty()) f.base_cone = 0;
    return f;
}

RatMatrix working_rays(const Fan& f) {
    if (f.rays.empty()) return {};
    if (static_cast<int>(f.rays[0].size()) == f.dimension) return f.rays;
    std::vector<int> cols = pivot_columns(f.rays);
    RatMatrix out;
    for (const auto& r : f.rays) {
        RatVector v;
        for (int c : cols) v.push_back(r[static_cast<std::size_t>(c)]);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

RatMatrix cone_matrix(const RatMatrix& rays, const std::vector<int>& cone) {
    // Rows are the coordinates, columns the rays.
    std::size_t n = cone.size();
    RatMatrix m(n, RatVector(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = rays[static_cast<std::size_t>(cone[j])][i];
    return m;
}

bool is_compat_kind(FanKind k) {
    return k == FanKind::primal || k == FanKind::dual || k == FanKind::design_primal || k == FanKind::design_dual;
}

bool structural_condition1(const Fan& f, const RatMatrix& w) {
    if (!f.base_cone || !is_compat_kind(f.kind)) return false;
    const auto& base = f.cones[static_cast<std::size_t>(*f.base_cone)];
    std::vector<char> hit(static_cast<std::size_t>(f.dimension), 0);
    std::vector<char> in_base(w.size(), 0);
    for (int r : base) {
        in_base[static_cast<std::size_t>(r)] = 1;
        const auto& v = w[static_cast<std::size_t>(r)];
        int pos = -1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == -1 && pos < 0) pos = static_cast<int>(i);
            else if (sgn(v[i]) != 0) return false;
        }
        if (pos < 0 || hit[static_cast<std::size_t>(pos)]) return false;
        hit[static_cast<std::size_t>(pos)] = 1;
    }
    for (std::size_t r = 0; r < w.size(); ++r) {
        if (in_base[r]) continue;
        for (const auto& x : w[r])
            if (sgn(x) < 0) return false;
    }
    return true;
}

void compute_flip(const Fan& f, const RatMatrix& w, FlipRecord& rec) {
    RatMatrix vecs;
    for (int r : rec.rays) vecs.push_back(w[static_cast<std::size_t>(r)]);
    int pivot = static_cast<int>(rec.rays.size()) - 2;
    auto dep = nullspace_dependence(vecs, pivot);
    if (!dep) {
        rec.rank_deficient = true;
        rec.separating = false;
        return;
    }
    rec.coeffs = dep->coeffs;
    rec.pivot_zero = dep->pivot_zero;
    rec.separating = !dep->pivot_zero && sgn(rec.coeffs.back()) > 0;
    if (!f.supports.empty()) {
        VertexSet bar = f.supports[static_cast<std::size_t>(rec.leaving)] | f.supports[static_cast<std::size_t>(rec.entering)];
        bool local = true;
        for (std::size_t i = 0; i < rec.rays.size(); ++i)
            if (sgn(rec.coeffs[i]) != 0 && !f.supports[static_cast<std::size_t>(rec.rays[i])].is_subset_of(bar)) local = false;
        rec.local = local;
    }
}

struct RidgeHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// (cone, position) pairs per ridge.
using RidgeMap = std::unordered_map<std::vector<int>, std::vector<std::pair<int, int>>, RidgeHash>;

RidgeMap ridge_map(const Fan& f) {
    RidgeMap m;
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        const auto& cone = f.cones[c];
        for (std::size_t i = 0; i < cone.size(); ++i) {
            std::vector<int> ridge;
            for (std::size_t j = 0; j < cone.size(); ++j)
                if (j != i) ridge.push_back(cone[j]);
            m[ridge].emplace_back(static_cast<int>(c), static_cast<int>(i));
        }
    }
    return m;
}

FlipRecord make_record(const Fan& f, const std::vector<int>& ridge, int ca, int ia, int cb, int ib) {
    FlipRecord rec;
    rec.cone_a = ca;
    rec.cone_b = cb;
    rec.leaving = f.cones[static_cast<std::size_t>(ca)][static_cast<std::size_t>(ia)];
    rec.entering = f.cones[static_cast<std::size_t>(cb)][static_cast<std::size_t>(ib)];
    rec.rays = ridge;
    rec.rays.push_back(rec.leaving);
    rec.rays.push_back(rec.entering);
    return rec;
}

}  // namespace

FanReport verify_fan(const Fan& f, int jobs) {
    FanReport rep;
    const int n = f.dimension;
    for (const auto& r : f.rays)
        if (r.size() != f.rays[0].size()) {
            rep.problems.push_back("rays have inconsistent lengths");
            return rep;
        }
    RatMatrix w = working_rays(f);
    if (!w.empty() && rank(w) != n) {
        rep.problems.push_back("rays do not span the fan dimension");
        return rep;
    }

    std::set<RatVector> distinct(w.begin(), w.end());
    rep.distinct_rays_ok = distinct.size() == w.size();
    if (!rep.distinct_rays_ok) rep.problems.push_back("two rays coincide");

    bool shapes_ok = !f.cones.empty();
    for (const auto& c : f.cones) {
        std::set<int> s(c.begin(), c.end());
        if (static_cast<int>(s.size()) != n || static_cast<int>(c.size()) != n) shapes_ok = false;
        for (int r : c)
            if (r < 0 || static_cast<std::size_t>(r) >= w.size()) shapes_ok = false;
    }
    if (!shapes_ok) {
        rep.problems.push_back("a cone does not have exactly dimension-many distinct rays");
        return rep;
    }

    rep.cones_nonsingular = true;
    for (std::size_t c = 0; c < f.cones.size(); ++c)
        if (n > 0 && det_sign(cone_matrix(w, f.cones[c])) == 0) {
            rep.cones_nonsingular = false;
            rep.problems.push_back("singular cone #" + std::to_string(c));
        }

    // Condition (1).
    int base = f.base_cone.value_or(0);
    if (structural_condition1(f, w)) {
        rep.structural_condition1 = true;
        rep.basis_cone_ok = rep.disjointness_ok = true;
    } else {
        const auto& bc = f.cones[static_cast<std::size_t>(base)];
        RatMatrix bm = cone_matrix(w, bc);
        rep.basis_cone_ok = n == 0 || det_sign(bm) != 0;
        rep.disjointness_ok = rep.basis_cone_ok;
        if (rep.basis_cone_ok && n > 0) {
            RatVector p(static_cast<std::size_t>(n));
            for (int r : bc)
                for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
            for (std::size_t c = 0; c < f.cones.size(); ++c) {
                if (static_cast<int>(c) == base) continue;
                auto lam = solve_square(cone_matrix(w, f.cones[c]), p);
                if (!lam) continue;
                if (std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return sgn(x) >= 0; })) {
                    rep.disjointness_ok = false;
                    rep.problems.push_back("base cone interior point lies in cone #" + std::to_string(c));
                    break;
                }
            }
        }
        if (!rep.basis_cone_ok) rep.problems.push_back("base cone is not a basis");
    }

    // Adjacency from ridges.
    rep.pseudomanifold_ok = true;
    if (n > 0) {
        RidgeMap ridges = ridge_map(f);
        for (const auto& [ridge, owners] : ridges) {
            if (owners.size() != 2) {
                rep.pseudomanifold_ok = false;
                continue;
            }
            auto [ca, ia] = owners[0];
            auto [cb, ib] = owners[1];
            if (ca > cb) {
                std::swap(ca, cb);
                std::swap(ia, ib);
            }
            rep.flips.push_back(make_record(f, ridge, ca, ia, cb, ib));
        }
        if (!rep.pseudomanifold_ok) rep.problems.push_back("some ridge does not lie in exactly two cones");
    }
    std::sort(rep.flips.begin(), rep.flips.end(), [](const FlipRecord& a, const FlipRecord& b) {
        return std::tie(a.cone_a, a.cone_b, a.leaving) < std::tie(b.cone_a, b.cone_b, b.leaving);
    });

    // Condition (2).
    jobs = std::max(1, jobs);
    if (jobs == 1 || rep.flips.size() < 64) {
        for (auto& rec : rep.flips) compute_flip(f, w, rec);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                for (std::size_t i = static_cast<std::size_t>(j); i < rep.flips.size(); i += static_cast<std::size_t>(jobs))
                    compute_flip(f, w, rep.flips[i]);
            });
        for (auto& t : pool) t.join();
    }
    bool all_sep = true;
    for (const auto& rec : rep.flips)
        if (!rec.separating) {
            all_sep = false;
            rep.problems.push_back("non-separating flip " + f.ray_keys[static_cast<std::size_t>(rec.leaving)] + " <-> " +
                                   f.ray_keys[static_cast<std::size_t>(rec.entering)] +
                                   (rec.rank_deficient ? " (rank deficient)" : rec.pivot_zero ? " (pivot zero)" : ""));
        }
    rep.ok = rep.basis_cone_ok && rep.disjointness_ok && rep.pseudomanifold_ok && rep.distinct_rays_ok &&
             rep.cones_nonsingular && all_sep;
    return rep;
}

FlipRecord flip_dependence(const Fan& f, const std::vector<int>& cone, int ray) {
    std::vector<int> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    int ca = f.cone_index(sorted);
    if (ca < 0) throw InputError("flip_dependence: not a cone of the fan");
    auto pos = std::find(sorted.begin(), sorted.end(), ray);
    if (pos == sorted.end()) throw InputError("flip_dependence: ray not in cone");
    std::vector<int> ridge;
    for (int r : sorted)
        if (r != ray) ridge.push_back(r);
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        if (static_cast<int>(c) == ca) continue;
        const auto& other = f.cones[c];
        if (!std::includes(other.begin(), other.end(), ridge.begin(), ridge.end())) continue;
        int ib = 0;
        while (std::binary_search(ridge.begin(), ridge.end(), other[static_cast<std::size_t>(ib)])) ++ib;
        FlipRecord rec = make_record(f, ridge, ca, static_cast<int>(pos - sorted.begin()), static_cast<int>(c), ib);
        compute_flip(f, working_rays(f), rec);
        return rec;
    }
    throw InputError("flip_dependence: no adjacent cone");
}

Fan product_fan(const std::vector<Fan>& fans) {
    if (fans.empty()) throw InputError("product of no fans");
    if (fans.size() == 1) return fans[0];
    Fan out;
    out.kind = FanKind::product;
    std::set<std::string> labels;
    std::size_t total = 0;
    for (const auto& f : fans) {
        for (const auto& l : f.vertex_labels)
            if (!labels.insert(l).second) throw InputError("product_fan: overlapping vertex label " + l);
        total += f.rays.empty() ? 0 : f.rays[0].size();
    }
    std::size_t offset = 0;
    std::vector<std::size_t> ray_offset;
    for (const auto& f : fans) {
        ray_offset.push_back(out.rays.size());
        out.dimension += f.dimension;
        out.vertex_labels.insert(out.vertex_labels.end(), f.vertex_labels.begin(), f.vertex_labels.end());
        out.coordinate_keys.insert(out.coordinate_keys.end(), f.coordinate_keys.begin(), f.coordinate_keys.end());
        std::size_t width = f.rays.empty() ? 0 : f.rays[0].size();
        for (std::size_t r = 0; r < f.rays.size(); ++r) {
            RatVector v(total);
            for (std::size_t i = 0; i < width; ++i) v[offset + i] = f.rays[r][i];
            out.rays.push_back(std::move(v));
            out.ray_keys.push_back(f.ray_keys[r]);
            if (!f.supports.empty()) out.supports.push_back(f.supports[r]);
        }
        offset += width;
    }
    if (out.supports.size() != out.rays.size()) out.supports.clear();
    out.cones = {{}};
    for (std::size_t k = 0; k < fans.size(); ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& partial : out.cones)
            for (const auto& c : fans[k].cones) {
                auto merged = partial;
                for (int r : c) merged.push_back(r + static_cast<int>(ray_offset[k]));
                std::sort(merged.begin(), merged.end());
                next.push_back(std::move(merged));
            }
        out.cones = std::move(next);
    }
    // Supports of different factors live on different graphs; they are not comparable.
    out.supports.clear();
    return out;
}

bool fans_equal(const Fan& a, const Fan& b, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.dimension != b.dimension) return fail("dimension differs");
    if (a.coordinate_keys.size() != b.coordinate_keys.size()) return fail("coordinate count differs");
    std::vector<std::size_t> perm;
    for (const auto& k : a.coordinate_keys) {
        auto it = std::find(b.coordinate_keys.begin(), b.coordinate_keys.end(), k);
        if (it == b.coordinate_keys.end()) return fail("coordinate " + k + " missing");
        perm.push_back(static_cast<std::size_t>(it - b.coordinate_keys.begin()));
    }
    if (a.rays.size() != b.rays.size()) return fail("ray count differs");
    std::map<std::string, int> bidx;
    for (std::size_t r = 0; r < b.ray_keys.size(); ++r) bidx[b.ray_keys[r]] = static_cast<int>(r);
    for (std::size_t r = 0; r < a.rays.size(); ++r) {
        auto it = bidx.find(a.ray_keys[r]);
        if (it == bidx.end()) return fail("ray " + a.ray_keys[r] + " missing");
        const auto& va = a.rays[r];
        const auto& vb = b.rays[static_cast<std::size_t>(it->second)];
        if (va.size() != vb.size()) return fail("ray length differs");
        for (std::size_t i = 0; i < va.size(); ++i)
            if (va[i] != vb[perm[i]]) return fail("ray " + a.ray_keys[r] + " differs");
    }
    auto cone_keys = [](const Fan& f) {
        std::set<std::vector<std::string>> out;
        for (const auto& c : f.cones) {
            std::vector<std::string> keys;
            for (int r : c) keys.push_back(f.ray_keys[static_cast<std::size_t>(r)]);
            std::sort(keys.begin(), keys.end());
            out.insert(std::move(keys));
        }
        return out;
    };
    if (cone_keys(a) != cone_keys(b)) return fail("cones differ");
    return true;
}

Fan relabel(const Fan& f, const std::function<std::string(const std::string&)>& ray_map,
            const std::function<std::string(const std::string&)>& coordinate_map) {
    Fan out = f;
    for (auto& k : out.ray_keys) k = ray_map(k);
    for (auto& k : out.coordinate_keys) k = coordinate_map(k);
    out.supports.clear();
    return out;
}

bool hyperplane_restriction_check(const Graph& g, const Tubing& initial, const Tube& t0, Mode mode) {
    auto pos = std::find(initial.begin(), initial.end(), t0);
    if (pos == initial.end()) throw InputError("restriction tube must belong to the initial tubing");
    const std::size_t drop = static_cast<std::size_t>(pos - initial.begin());
    ComplexData data = complex_data(g);
    Fan full = build_fan(g, data, initial, mode);

    Fan restricted;
    restricted.dimension = full.dimension - 1;
    auto key = [&](const Tube& s) { return set_to_string(g, link_split(g, t0, s)); };
    for (std::size_t i = 0; i < initial.size(); ++i)
        if (i != drop) restricted.coordinate_keys.push_back(key(initial[i]));
    std::vector<int> remap(data.tubes.size(), -1);
    for (std::size_t r = 0; r < data.tubes.size(); ++r) {
        const Tube& s = data.tubes[r];
        if (s == t0 || !are_compatible(g, t0, s)) continue;
        const auto& v = full.rays[r];
        if (sgn(v[drop]) != 0) return false;
        RatVector cut;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != drop) cut.push_back(v[i]);
        remap[r] = static_cast<int>(restricted.rays.size());
        restricted.rays.push_back(std::move(cut));
        restricted.ray_keys.push_back(key(s));
    }
    int t0_index = data.tube_index(t0);
    for (const auto& c : full.cones) {
        if (!std::binary_search(c.begin(), c.end(), t0_index)) continue;
        std::vector<int> cone;
        for (int r : c)
            if (r != t0_index) cone.push_back(remap[static_cast<std::size_t>(r)]);
        std::sort(cone.begin(), cone.end());
        restricted.cones.push_back(std::move(cone));
    }

    Graph inner = induced_subgraph(g, t0);
    Graph outer = reconnected_complement(g, t0);
    Tubing inner_init, outer_init;
    for (const auto& t : initial) {
        if (t.is_proper_subset_of(t0)) inner_init.push_back(transport(g, inner, t));
        else if (!t.is_subset_of(t0)) outer_init.push_back(transport(g, outer, t - t0));
    }
    Fan product = product_fan({build_fan(inner, make_tubing(inner_init), mode),
                               build_fan(outer, make_tubing(outer_init), mode)});
    return fans_equal(restricted, product);
}

}  // namespace nestfan
