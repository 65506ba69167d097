#include "support.hpp"
#include "nestfan/families.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace nestfan;
using nestfan::testing::cone_tubings;
using nestfan::testing::connected_graphs;
using nestfan::testing::flip_pairs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::ostringstream log;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

std::vector<Tubing> all_initial(const ComplexData& data) { return cone_tubings(data); }

// Graphs whose components are catalog graphs, one graph per multiset of components.
std::vector<Graph> graphs_up_to(int max_vertices, int min_components = 1, int max_components = 99) {
    std::vector<std::pair<int, Graph>> parts;
    for (int n = 1; n <= max_vertices; ++n)
        for (auto& g : connected_graph_catalog(n)) parts.emplace_back(n, std::move(g));
    std::vector<Graph> out;
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t from, int used) -> void {
        int k = static_cast<int>(chosen.size());
        if (k >= min_components) {
            std::vector<std::string> labels;
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                const Graph& part = parts[chosen[i]].second;
                const int offset = static_cast<int>(labels.size());
                for (const auto& l : part.labels()) labels.push_back(std::to_string(i + 1) + "." + l);
                for (auto [a, b] : part.edges()) edges.emplace_back(a + offset, b + offset);
            }
            out.emplace_back(labels, edges);
        }
        if (k == max_components) return;
        for (std::size_t i = from; i < parts.size(); ++i)
            if (used + parts[i].first <= max_vertices) {
                chosen.push_back(i);
                self(self, i, used + parts[i].first);
                chosen.pop_back();
            }
    };
    for (std::size_t i = 0; i < parts.size(); ++i) {
        chosen = {i};
        rec(rec, i, parts[i].first);
    }
    return out;
}

void fan_theorem(Outcome& o) {
    std::size_t fans = 0;
    for (const auto& g : connected_graphs(1, 5)) {
        ComplexData data = complex_data(g);
        for (const auto& t : all_initial(data))
            for (Mode m : {Mode::primal, Mode::dual}) {
                ++fans;
                o.require(verify_fan(build_fan(g, data, t, m)).ok, "fan not ok on " + tubing_to_string(g, t));
            }
    }
    std::mt19937_64 rng(20261015);
    auto six = connected_graph_catalog(6);
    const int samples = 60;
    for (int i = 0; i < samples; ++i) {
        const Graph& g = six[std::uniform_int_distribution<std::size_t>(0, six.size() - 1)(rng)];
        ComplexData data = complex_data(g);
        const auto& cone = data.cones[std::uniform_int_distribution<std::size_t>(0, data.cones.size() - 1)(rng)];
        Tubing t;
        for (int k : cone) t.push_back(data.tubes[static_cast<std::size_t>(k)]);
        t = make_tubing(t);
        for (Mode m : {Mode::primal, Mode::dual}) {
            ++fans;
            o.require(verify_fan(build_fan(g, data, t, m)).ok, "6-vertex fan not ok on " + tubing_to_string(g, t));
        }
    }
    o.log << fans << " fans verified (" << samples << " sampled 6-vertex pairs, seed 20261015)";
}

void design_fans(Outcome& o) {
    std::size_t fans = 0;
    for (const auto& g : connected_graphs(1, 4)) {
        DesignComplexData data = design_complex_data(g);
        for (const auto& cone : data.cones) {
            DesignTubing init;
            for (int i : cone) init.push_back(data.tubes[static_cast<std::size_t>(i)]);
            init = make_design_tubing(init);
            for (Mode m : {Mode::primal, Mode::dual}) {
                ++fans;
                o.require(verify_fan(build_design_fan(g, data, init, m)).ok,
                          "design fan not ok on " + design_tubing_to_string(g, init));
            }
        }
        std::string why;
        o.require(fans_equal(build_design_fan(g, data, all_squares_tubing(g), Mode::primal), build_design_nested_fan(g), &why),
                  "all-squares fan differs from the design nested fan: " + why);
    }
    o.log << fans << " design fans verified";
}

void degree_trichotomy(Outcome& o) {
    std::size_t graphs = 0, pairs_checked = 0;
    for (const auto& g : graphs_up_to(6)) {
        ++graphs;
        auto pairs = flip_pairs(g);
        auto tubes = enumerate_tubes(g);
        for (const auto& a : tubes)
            for (const auto& b : tubes) {
                ++pairs_checked;
                int ab = degree(g, a, b), ba = degree(g, b, a);
                if (a == b) {
                    o.require(ab == -1, "(t||t) != -1");
                    continue;
                }
                o.require(ab >= 0, "negative degree");
                o.require((ab == 0 && ba == 0) == are_compatible(g, a, b), "compatibility mismatch");
                o.require((ab == 1 && ba == 1) == (pairs.count({a, b}) == 1), "exchangeability mismatch");
            }
    }
    o.log << graphs << " graphs, " << pairs_checked << " tube pairs";
}

void family_models(Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
        Graph p = make_family(Family::path, {n + 1});
        auto ds = polygon_diagonals(n);
        o.require(ds.size() == enumerate_tubes(p).size(), "path diagonal count");
        for (auto d : ds) {
            Tube t = polygon_tube(p, n, d);
            o.require(polygon_diagonal(p, n, t) == d, "path model not a bijection");
            for (auto e : ds) {
                if (d == e) continue;
                Tube u = polygon_tube(p, n, e);
                bool cross = diagonals_cross(d, e);
                o.require(cross != are_compatible(p, t, u), "path crossing vs compatibility");
                if (cross) o.require(degree(p, t, u) == 1, "path crossing degree != 1");
            }
        }
        if (n >= 2) {
            Graph c = make_family(Family::cycle, {n + 1});
            auto cs = cycle_diagonals(n);
            o.require(cs.size() == enumerate_tubes(c).size(), "cycle diagonal count");
            for (const auto& d : cs) {
                Tube t = cycle_tube(c, n, d);
                o.require(cycle_diagonal(c, n, t) == d, "cycle model not a bijection");
                for (const auto& e : cs)
                    if (!(d == e))
                        o.require(cycle_crossings(n, d, e) == degree(c, t, cycle_tube(c, n, e)), "cycle crossings vs degree");
            }
        }
        for (Family f : {Family::path, Family::cycle, Family::star}) {
            if (f == Family::cycle && n < 2) continue;
            Counts closed = closed_form_counts(f, n);
            Counts brute = brute_force_counts(make_family(f, {n + 1}));
            o.require(closed.proper_tubes == brute.proper_tubes && closed.maximal_tubings == brute.maximal_tubings &&
                          closed.k_tubings == brute.k_tubings,
                      "closed form count mismatch at n = " + std::to_string(n));
        }
    }
    o.log << "path/cycle models and path/cycle/star counts n <= 6; complete graph printed vs enumerated:";
    for (int n = 1; n <= 5; ++n) {
        Counts printed = complete_printed_counts(n);
        Counts brute = brute_force_counts(make_family(Family::complete, {n + 1}));
        o.log << " n=" << n << " tubes " << printed.proper_tubes << "/" << brute.proper_tubes << " maximal "
              << printed.maximal_tubings << "/" << brute.maximal_tubings << ";";
    }
}

void dependence_patterns(Outcome& o) {
    std::size_t records = 0;
    auto scan = [&](const Graph& g, auto&& check) {
        ComplexData data = complex_data(g);
        for (const auto& t : all_initial(data)) {
            FanReport rep = verify_fan(build_fan(g, data, t, Mode::primal));
            o.require(rep.ok, "primal fan not ok");
            for (const auto& rec : rep.flips) {
                ++records;
                o.require(!rec.rank_deficient, "rank deficient flip");
                Int a = rec.coefficient(rec.leaving), b = rec.coefficient(rec.entering);
                std::vector<Int> forced;
                for (std::size_t i = 0; i < rec.rays.size(); ++i)
                    if (rec.rays[i] != rec.leaving && rec.rays[i] != rec.entering) forced.push_back(rec.coeffs[i]);
                check(a, b, forced);
            }
        }
    };
    for (int n = 2; n <= 7; ++n)
        scan(make_family(Family::path, {n}), [&](const Int& a, const Int& b, const std::vector<Int>& forced) {
            o.require((a == 1 || a == 2) && (b == 1 || b == 2), "path flipped coefficient outside {1,2}");
            for (const auto& c : forced) o.require(c == 0 || c == -1, "path forced coefficient outside {-1,0}");
        });
    for (int n = 3; n <= 7; ++n)
        scan(make_family(Family::cycle, {n}), [&](const Int&, const Int&, const std::vector<Int>& forced) {
            for (const auto& c : forced) o.require(c == 0 || c == -1 || c == -2, "cycle forced coefficient outside {0,-1,-2}");
        });
    for (int n = 2; n <= 5; ++n)
        scan(make_family(Family::complete, {n}), [&](const Int& a, const Int& b, const std::vector<Int>&) {
            o.require(complete_flip_pattern(a, b) || complete_flip_pattern(b, a),
                      "complete flip pair (" + a.get_str() + "," + b.get_str() + ")");
        });
    o.log << records << " flip dependences";
}

void polytopality(Outcome& o) {
    std::size_t lp = 0, pc = 0;
    for (const auto& g : connected_graph_catalog(4)) {
        ComplexData data = complex_data(g);
        for (const auto& t : all_initial(data))
            for (Mode m : {Mode::primal, Mode::dual}) {
                ++lp;
                o.require(find_weights_lp(build_fan(g, data, t, m)).outcome == WeightSearch::Outcome::feasible,
                          "LP infeasible on " + tubing_to_string(g, t));
            }
    }
    for (int n = 2; n <= 7; ++n)
        for (Family f : {Family::path, Family::cycle}) {
            if (f == Family::cycle && n < 3) continue;
            Graph g = make_family(f, {n});
            ComplexData data = complex_data(g);
            for (const auto& t : all_initial(data))
                for (Mode m : {Mode::primal, Mode::dual}) {
                    ++pc;
                    Fan fan = build_fan(g, data, t, m);
                    FanReport rep = verify_fan(fan);
                    auto w = path_cycle_weights(g, fan, rep);
                    o.require(w.has_value(), "no path/cycle weights");
                    if (w) o.require(verify_normal_fan(realize_polytope(fan, *w), fan), "normal fan mismatch");
                }
        }
    for (int n = 1; n <= 4; ++n) {
        Polytope p = star_polytope(n);
        Rational sum = 0;
        for (int i = 0; i <= n; ++i) sum += Rational(1, factorial(i));
        Rational expected = Rational(factorial(n)) * sum;
        o.require(Rational(static_cast<long>(p.vertices.size())) == expected, "star vertex count");
        Graph g = make_family(Family::star, {n + 1});
        std::vector<Tube> leaves;
        for (int i = 1; i <= n; ++i) leaves.push_back(g.set_of({i}));
        Fan fan = build_fan(g, make_tubing(leaves), Mode::primal);
        std::string why;
        o.require(verify_normal_fan(p, fan, &why), "star normal fan: " + why);
    }
    o.log << lp << " LP systems, " << pc << " path/cycle realizations, stellohedra n <= 4";
}

void structure(Outcome& o) {
    std::size_t products = 0, restrictions = 0;
    for (const auto& u : graphs_up_to(6, 2, 2)) {
        auto comps = connected_components(u);
        ComplexData data = complex_data(u);
        for (const auto& init : all_initial(data))
            for (Mode m : {Mode::primal, Mode::dual}) {
                std::vector<Fan> factors;
                for (const auto& c : comps) {
                    Graph part = induced_subgraph(u, c);
                    std::vector<Tube> local;
                    for (const auto& t : init)
                        if (t.is_subset_of(c)) local.push_back(transport(u, part, t));
                    factors.push_back(build_fan(part, make_tubing(local), m));
                }
                ++products;
                std::string why;
                o.require(fans_equal(product_fan(factors), build_fan(u, data, init, m), &why), "product fan: " + why);
            }
    }
    for (const auto& g : connected_graphs(1, 5)) {
        ComplexData data = complex_data(g);
        for (const auto& init : all_initial(data))
            for (const auto& t0 : init) {
                ++restrictions;
                o.require(hyperplane_restriction_check(g, init, t0), "restriction fails on " + tubing_to_string(g, init));
            }
    }
    o.log << products << " product fans, " << restrictions << " restrictions";
}

Tube interval(const Graph& path, const std::string& text) {
    std::string body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    int j = std::stoi(body.substr(0, comma));
    int k = comma == std::string::npos ? j : std::stoi(body.substr(comma + 1));
    Tube t = path.empty_set();
    for (int v = j; v <= k; ++v) t.insert(v - 1);
    return t;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

void isomorphisms(Outcome& o) {
    std::size_t spiders = 0, fans = 0;
    for (const auto& g : connected_graphs(1, 6)) {
        auto ps = spider_presentations(g);
        if (ps.empty()) continue;
        ++spiders;
        auto tubes = enumerate_tubes(g);
        for (const auto& p : ps)
            for (const auto& a : tubes)
                for (const auto& b : tubes)
                    o.require(degree(g, spider_omega(g, p, a), spider_omega(g, p, b)) == degree(g, b, a),
                              "spider involution does not dualize degree");
        ComplexData data = complex_data(g);
        for (const auto& t : all_initial(data)) {
            ++fans;
            std::string why;
            o.require(spider_dual_is_primal(g, ps.front(), data, t, &why), "D* != D o Omega: " + why);
        }
    }
    for (int n = 1; n <= 6; ++n) {
        Graph p = make_family(Family::path, {n + 1});
        for (const auto& t : enumerate_tubes(p)) {
            o.require(path_rotation(p, n + 3, t) == t, "rotation order exceeds n + 3");
            for (int k = 1; k < n + 3; ++k) {
                bool fixed_all = true;
                for (const auto& s : enumerate_tubes(p)) fixed_all = fixed_all && path_rotation(p, k, s) == s;
                o.require(!fixed_all || n < 2, "rotation order below n + 3");
            }
        }
    }
    Graph p6 = make_family(Family::path, {6});
    auto from = words("[1] [2] [3] [4] [5] [6] [1,2] [2,3] [3,4] [4,5] [5,6] [1,3] [2,4] [3,5] [4,6] [1,4] [2,5] [3,6] [1,5] [2,6]");
    auto to = words("[2,6] [1] [2] [3] [4] [5] [3,6] [1,2] [2,3] [3,4] [4,5] [4,6] [1,3] [2,4] [3,5] [5,6] [1,4] [2,5] [6] [1,5]");
    for (std::size_t i = 0; i < from.size(); ++i)
        o.require(path_rotation(p6, 1, interval(p6, from[i])) == interval(p6, to[i]), "rotation table row " + from[i]);
    o.log << spiders << " spiders, " << fans << " dual/primal fan pairs, rotation table n = 5";
}

void ordered_partition_fixture(Outcome& o) {
    Graph k8 = make_family(Family::complete, {8});
    Tubing t = nestfan::testing::tubing(k8, {{"1", "4", "6"}, {"1", "2", "4", "6", "8"}, {"1", "2", "3", "4", "6", "8"}});
    std::string got = ordered_partition_string(k8, ordered_partition(k8, t));
    o.require(got == "57|3|28|146", "got " + got);
    o.log << "{146,12468,123468} -> " << got;
}

Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            IntVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Int term = m[0][c] * cofactor_det(minor);
        total += c % 2 ? Int(-term) : term;
    }
    return total;
}

// Kernel of the map c -> Σ c_i v_i by Gauss-Jordan elimination over the rationals.
std::vector<RatVector> gauss_kernel(const IntMatrix& vs) {
    const std::size_t k = vs.size(), n = vs.empty() ? 0 : vs[0].size();
    RatMatrix a(n, RatVector(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) a[j][i] = Rational(vs[i][j]);
    std::vector<int> pivot_of_col(k, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < n; ++r)
            if (r != row && a[r][col] != 0) {
                Rational f = a[r][col];
                for (std::size_t c = 0; c < k; ++c) a[r][c] -= f * a[row][c];
            }
        pivot_of_col[col] = static_cast<int>(row++);
    }
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < k; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        RatVector v(k);
        v[free] = 1;
        for (std::size_t c = 0; c < k; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][free];
        basis.push_back(v);
    }
    return basis;
}

void linalg_oracles(Outcome& o) {
    std::mt19937_64 rng(1015);
    auto matrix = [&](std::size_t rows, std::size_t cols, int bound) {
        std::uniform_int_distribution<int> d(-bound, bound);
        IntMatrix m(rows, IntVector(cols));
        for (auto& r : m)
            for (auto& x : r) x = d(rng);
        return m;
    };
    std::size_t singular = 0, deficient = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IntMatrix m = matrix(n, n, 5);
        if (trial % 9 == 0 && n > 1) m[n - 1] = m[0];
        Int oracle = cofactor_det(m);
        if (oracle == 0) ++singular;
        o.require(determinant(m) == oracle, "determinant mismatch");
        o.require(det_sign(m) == sgn(oracle), "det_sign mismatch");
    }
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        IntMatrix vs = matrix(n + 1, n, 9);
        if (trial % 11 == 0 && n > 1) vs[n] = vs[n - 1] = vs[0];
        int pivot = trial % static_cast<int>(n + 1);
        auto kernel = gauss_kernel(vs);
        auto d = nullspace_dependence(vs, pivot);
        if (kernel.size() != 1) {
            ++deficient;
            o.require(!d, "dependence returned for a rank deficient instance");
            continue;
        }
        o.require(d.has_value(), "no dependence for a rank n instance");
        if (!d) continue;
        const RatVector& ref = kernel[0];
        std::size_t lead = 0;
        while (ref[lead] == 0) ++lead;
        Rational scale = Rational(d->coeffs[lead]) / ref[lead];
        for (std::size_t i = 0; i <= n; ++i) o.require(Rational(d->coeffs[i]) == scale * ref[i], "dependence not proportional");
        Int g = 0;
        for (const auto& c : d->coeffs) g = gcd(g, c);
        o.require(g == 1, "dependence not primitive");
        const Int& pc = d->coeffs[static_cast<std::size_t>(pivot)];
        o.require(d->pivot_zero == (pc == 0), "pivot_zero flag");
        if (pc != 0) o.require(sgn(pc) > 0, "pivot coefficient not positive");
    }
    o.log << "500 determinants (" << singular << " singular), 500 nullspaces (" << deficient << " rank deficient)";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        void (*run)(Outcome&);
    };
    const Criterion criteria[] = {
        {1, "fan theorem suite", fan_theorem},
        {2, "design fan suite", design_fans},
        {3, "degree trichotomy", degree_trichotomy},
        {4, "family models and counts", family_models},
        {5, "dependence coefficient patterns", dependence_patterns},
        {6, "polytopality", polytopality},
        {7, "products and restrictions", structure},
        {8, "isomorphisms", isomorphisms},
        {9, "ordered partition fixture", ordered_partition_fixture},
        {10, "exact linear algebra oracles", linalg_oracles},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.log.str();
        if (!o.pass) std::cout << " [first failure: " << o.detail << "]";
        std::cout << " (" << static_cast<int>(secs * 10) / 10.0 << "s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
