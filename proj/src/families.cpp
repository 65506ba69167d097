#include "nestfan/families.hpp"

#include <algorithm>
#include <set>

namespace nestfan {

namespace {

void require_family(const Graph& g, int vertices, std::size_t edges, const char* what) {
    if (static_cast<int>(g.num_vertices()) != vertices || g.edges().size() != edges)
        throw InputError(std::string("expected ") + what + " on " + std::to_string(vertices) + " vertices");
}

void require_path(const Graph& g, int n) {
    require_family(g, n + 1, static_cast<std::size_t>(n), "a path");
    for (int v = 0; v < n; ++v)
        if (!g.adjacent(v, v + 1)) throw InputError("path vertices must be in order");
}

void require_cycle(const Graph& g, int n) {
    if (n < 2) throw InputError("cycle model needs n >= 2");
    require_family(g, n + 1, static_cast<std::size_t>(n + 1), "a cycle");
    for (int v = 0; v <= n; ++v)
        if (!g.adjacent(v, (v + 1) % (n + 1))) throw InputError("cycle vertices must be in order");
}

void require_complete(const Graph& g) {
    const std::size_t n = g.num_vertices();
    require_family(g, static_cast<int>(n), n * (n - 1) / 2, "a complete graph");
}

bool chords_cross(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) return false;
    bool c_in = a < c && c < b;
    bool d_in = a < d && d < b;
    return c_in != d_in;
}

}  // namespace

std::vector<Diagonal> polygon_diagonals(int n) {
    std::vector<Diagonal> out;
    for (int a = 0; a <= n + 2; ++a)
        for (int b = a + 2; b <= n + 2; ++b)
            if (!(a == 0 && b == n + 2)) out.push_back({a, b});
    return out;
}

Tube polygon_tube(const Graph& path, int n, Diagonal d) {
    require_path(path, n);
    if (d.a > d.b) std::swap(d.a, d.b);
    if (d.a < 0 || d.b > n + 2 || d.b - d.a < 2 || (d.a == 0 && d.b == n + 2))
        throw InputError("not an internal diagonal");
    // Labels a+1..b-1 sit at indices a..b-2.
    Tube t = path.empty_set();
    for (int v = d.a; v <= d.b - 2; ++v) t.insert(v);
    return t;
}

Diagonal polygon_diagonal(const Graph& path, int n, const Tube& t) {
    require_path(path, n);
    if (!is_proper_tube(path, t)) throw InputError("not a proper tube");
    auto m = t.members();
    return {m.front(), m.back() + 2};
}

bool diagonals_cross(Diagonal d, Diagonal e) { return chords_cross(d.a, d.b, e.a, e.b); }

Diagonal SymDiagonal::mirror(int n) const {
    const int m = 2 * n + 2;
    int a = (rep.a + n + 1) % m, b = (rep.b + n + 1) % m;
    if (a > b) std::swap(a, b);
    return {a, b};
}

SymDiagonal make_sym_diagonal(int n, Diagonal d) {
    const int m = 2 * n + 2;
    if (d.a > d.b) std::swap(d.a, d.b);
    if (d.a < 0 || d.b >= m || d.b - d.a < 2 || (d.a == 0 && d.b == m - 1))
        throw InputError("not an internal diagonal of the (2n+2)-gon");
    SymDiagonal s{d, d.b - d.a == n + 1};
    Diagonal e = s.mirror(n);
    if (e < d) s.rep = e;
    return s;
}

std::vector<SymDiagonal> cycle_diagonals(int n) {
    const int m = 2 * n + 2;
    std::set<SymDiagonal> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 2; b < m; ++b)
            if (!(a == 0 && b == m - 1)) out.insert(make_sym_diagonal(n, {a, b}));
    return {out.begin(), out.end()};
}

Tube cycle_tube(const Graph& cycle, int n, const SymDiagonal& p) {
    require_cycle(cycle, n);
    const int m = 2 * n + 2;
    SymDiagonal s = make_sym_diagonal(n, p.rep);
    Tube t = cycle.empty_set();
    int a = s.rep.a, b = s.rep.b;
    if (s.long_diagonal) {
        t = cycle.all();
        t.erase(a % (n + 1));
        return t;
    }
    if (b - a > n + 1) std::swap(a, b);
    for (int q = (a + 1) % m; q != b; q = (q + 1) % m) t.insert(q % (n + 1));
    return t;
}

SymDiagonal cycle_diagonal(const Graph& cycle, int n, const Tube& t) {
    require_cycle(cycle, n);
    if (!is_proper_tube(cycle, t)) throw InputError("not a proper tube");
    const int size = static_cast<int>(t.size());
    if (size == n) {
        int i = (cycle.all() - t).first();
        return make_sym_diagonal(n, {i, i + n + 1});
    }
    int start = -1;
    for (int v : t.members())
        if (!t.contains((v + n) % (n + 1))) start = v;
    const int m = 2 * n + 2;
    int a = (start - 1 + m) % m;
    return make_sym_diagonal(n, {a, (a + size + 1) % m});
}

int cycle_crossings(int n, const SymDiagonal& d, const SymDiagonal& d_prime) {
    int c = chords_cross(d.rep.a, d.rep.b, d_prime.rep.a, d_prime.rep.b) ? 1 : 0;
    if (!d.long_diagonal) {
        Diagonal e = d.mirror(n);
        if (chords_cross(e.a, e.b, d_prime.rep.a, d_prime.rep.b)) ++c;
    }
    return c;
}

std::vector<int> complete_lattice_path(const Graph& complete, const Tube& t, LatticeKind which) {
    require_complete(complete);
    const int n = static_cast<int>(complete.num_vertices()) - 1;
    std::vector<int> heights;
    Tube prefix = complete.empty_set();
    for (int i = 0; i <= n; ++i) {
        if (i > 0) prefix.insert(i - 1);
        if (which == LatticeKind::phi) heights.push_back(static_cast<int>((t - prefix).size()));
        else heights.push_back(i == 0 ? 0 : degree(complete, prefix, t));
    }
    return heights;
}

std::vector<VertexSet> ordered_partition(const Graph& complete, const Tubing& t) {
    require_complete(complete);
    if (!is_tubing(complete, t)) throw InputError("not a tubing");
    std::vector<VertexSet> blocks(t.size() + 1, complete.empty_set());
    for (int v = 0; v < static_cast<int>(complete.num_vertices()); ++v) {
        std::size_t sigma = 0;
        for (const auto& tube : t)
            if (tube.contains(v)) ++sigma;
        blocks[sigma].insert(v);
    }
    return blocks;
}

std::string ordered_partition_string(const Graph& complete, const std::vector<VertexSet>& blocks) {
    bool short_labels = std::all_of(complete.labels().begin(), complete.labels().end(),
                                    [](const std::string& l) { return l.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += '|';
        bool first = true;
        for (int v : blocks[i].members()) {
            if (!first && !short_labels) out += ',';
            out += complete.label(v);
            first = false;
        }
    }
    return out;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    std::vector<std::vector<Int>> s(static_cast<std::size_t>(n) + 1, std::vector<Int>(static_cast<std::size_t>(n) + 2, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Int(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return k > n ? Int(0) : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

// Star S_{n+1}: tubings with k tubes, the ground set counted as a tube.
Int star_formula(int n, int k) {
    Int s = 0;
    for (int i = 1; i <= k; ++i)
        s += binomial(n, k - i) * factorial(i - 1) * (Int(i) * stirling2(n - k + i, i) + stirling2(n - k + i, i - 1));
    return s;
}

void finish(Counts& c) {
    c.maximal_tubings = c.k_tubings.back();
    Int total = 0;
    for (const auto& x : c.k_tubings) total += x;
    c.total = total;
}

}  // namespace

Counts closed_form_counts(Family kind, int n) {
    if (n < 1) throw InputError("closed forms need n >= 1");
    Counts c;
    switch (kind) {
    case Family::path:
        c.proper_tubes = Int(n * (n + 3) / 2);
        for (int k = 0; k <= n; ++k) c.k_tubings.push_back(binomial(n, k) * binomial(n + k + 2, k) / (k + 1));
        finish(c);
        c.maximal_tubings = binomial(2 * n + 2, n + 1) / (n + 2);
        break;
    case Family::cycle:
        if (n < 2) throw InputError("cycles need n >= 2");
        c.proper_tubes = Int(n * (n + 1));
        for (int k = 0; k <= n; ++k) c.k_tubings.push_back(binomial(n, k) * binomial(n + k, k));
        finish(c);
        c.maximal_tubings = binomial(2 * n, n);
        break;
    case Family::star: {
        Int p = 1;
        p <<= static_cast<unsigned>(n);
        c.proper_tubes = p + n - 1;
        for (int k = 0; k <= n; ++k) c.k_tubings.push_back(star_formula(n, k + 1));
        finish(c);
        // n! Σ_{i=0}^{n} 1/i! = Σ n!/i!.
        Int m = 0;
        for (int i = 0; i <= n; ++i) m += factorial(n) / factorial(i);
        c.maximal_tubings = m;
        break;
    }
    default: throw InputError("closed forms exist for path, cycle and star only");
    }
    return c;
}

Counts brute_force_counts(const Graph& g) {
    Counts c;
    c.proper_tubes = Int(static_cast<long>(enumerate_tubes(g).size()));
    c.k_tubings.assign(static_cast<std::size_t>(nested_dimension(g)) + 1, Int(0));
    for (const auto& t : enumerate_tubings(g)) c.k_tubings[t.size()] += 1;
    Int total = 0;
    for (const auto& x : c.k_tubings) total += x;
    c.total = total;
    c.maximal_tubings = c.k_tubings.back();
    return c;
}

Counts complete_printed_counts(int n) {
    Counts c;
    Int p = 1;
    p <<= static_cast<unsigned>(n);
    c.proper_tubes = p - 2;
    c.maximal_tubings = factorial(n);
    for (int k = 0; k <= n; ++k) c.k_tubings.push_back(factorial(k) * stirling2(n, k));
    return c;
}

bool complete_flip_pattern(const Int& alpha, const Int& alpha_prime) {
    if (sgn(alpha) <= 0 || sgn(alpha_prime) <= 0) return false;
    if (alpha == alpha_prime) return true;
    if (alpha_prime % alpha == 0) return true;
    Int p = alpha - alpha_prime;
    return sgn(p) > 0 && alpha_prime % p == 0;
}

}  // namespace nestfan
