#include "nestfan/linalg.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace nestfan {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

IntVector to_int_vector(const std::vector<int>& v) { return IntVector(v.begin(), v.end()); }

RatVector to_rat_vector(const std::vector<int>& v) { return RatVector(v.begin(), v.end()); }

RatVector to_rat_vector(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

namespace {

struct Overflow {};

// Fixed-width scalar whose operations throw Overflow instead of wrapping.
struct Small {
    std::int64_t v = 0;
};

inline bool is_zero(const Small& a) { return a.v == 0; }
inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline int sign_of(const Small& a) { return (a.v > 0) - (a.v < 0); }
inline int sign_of(const Int& a) { return sgn(a); }

// (a*b - c*d) / p, exact by construction of Bareiss.
inline Small cross_div(const Small& a, const Small& b, const Small& c, const Small& d, const Small& p) {
    __int128 r = static_cast<__int128>(a.v) * b.v - static_cast<__int128>(c.v) * d.v;
    r /= p.v;
    if (r > INT64_MAX || r < INT64_MIN) throw Overflow{};
    return Small{static_cast<std::int64_t>(r)};
}

inline Int cross_div(const Int& a, const Int& b, const Int& c, const Int& d, const Int& p) {
    Int r = a * b - c * d;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    return r;
}

template <class T>
T one() {
    if constexpr (std::is_same_v<T, Small>) return Small{1};
    else return Int(1);
}

// In-place fraction-free row echelon. Returns the rank; pivot columns are appended.
template <class T>
int bareiss_echelon(std::vector<std::vector<T>>& m, std::vector<int>* pivots, int* swaps) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    T prev = one<T>();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            if (swaps) ++*swaps;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = cross_div(m[i][j], m[r][c], m[i][c], m[r][j], prev);
            m[i][c] = T{};
        }
        prev = m[r][c];
        if (pivots) pivots->push_back(static_cast<int>(c));
        ++r;
    }
    return static_cast<int>(r);
}

template <class T>
std::vector<std::vector<T>> convert(const IntMatrix& m) {
    std::vector<std::vector<T>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const auto& x : m[i]) {
            if constexpr (std::is_same_v<T, Small>) {
                if (!x.fits_slong_p()) throw Overflow{};
                out[i].push_back(Small{x.get_si()});
            } else {
                out[i].push_back(x);
            }
        }
    }
    return out;
}

inline Int to_int(const Small& s) { return Int(static_cast<long>(s.v)); }
inline Int to_int(const Int& s) { return s; }

template <class T>
Int det_impl(const IntMatrix& m) {
    auto a = convert<T>(m);
    const std::size_t n = a.size();
    int swaps = 0;
    std::vector<int> piv;
    int r = bareiss_echelon(a, &piv, &swaps);
    if (r < static_cast<int>(n)) return Int(0);
    for (std::size_t i = 0; i < n; ++i)
        if (piv[i] != static_cast<int>(i)) return Int(0);
    Int d = to_int(a[n - 1][n - 1]);
    return swaps % 2 ? Int(-d) : d;
}

IntMatrix scale_rows_to_int(const RatMatrix& m, std::vector<Int>* factors) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int l = 1;
        for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (const auto& x : m[i]) out[i].push_back(x.get_num() * (l / x.get_den()));
        if (factors) factors->push_back(l);
    }
    return out;
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m[0].size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

template <class T>
std::optional<IntVector> kernel_impl(const IntMatrix& vectors) {
    // Columns are the vectors.
    auto a = convert<T>(transpose(vectors));
    const std::size_t k = vectors.size();
    std::vector<int> piv;
    int r = bareiss_echelon(a, &piv, nullptr);
    if (r != static_cast<int>(k) - 1) return std::nullopt;
    IntMatrix e(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
        for (const auto& x : a[i]) e[i].push_back(to_int(x));
    IntVector c(k);
    for (std::size_t j = 0; j < k; ++j) {
        IntMatrix minor(static_cast<std::size_t>(r));
        for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
            for (std::size_t l = 0; l < k; ++l)
                if (l != j) minor[i].push_back(e[i][l]);
        Int d = minor.empty() ? Int(1) : determinant(minor);
        c[j] = j % 2 ? Int(-d) : d;
    }
    return c;
}

Dependence normalize(IntVector c, int pivot) {
    Int g = 0;
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 0)
        for (auto& x : c) x /= g;
    Dependence d;
    int ref = pivot;
    if (pivot < 0 || static_cast<std::size_t>(pivot) >= c.size() || sgn(c[static_cast<std::size_t>(pivot)]) == 0) {
        d.pivot_zero = true;
        ref = -1;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (sgn(c[i]) != 0) {
                ref = static_cast<int>(i);
                break;
            }
    }
    if (ref >= 0 && sgn(c[static_cast<std::size_t>(ref)]) < 0)
        for (auto& x : c) x = -x;
    d.coeffs = std::move(c);
    return d;
}

}  // namespace

Int determinant(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.empty()) return Int(1);
    try {
        return det_impl<Small>(m);
    } catch (const Overflow&) {
        return det_impl<Int>(m);
    }
}

int det_sign(const IntMatrix& m) { return sgn(determinant(m)); }

int det_sign(const RatMatrix& m) {
    // Scaling rows by positive factors keeps the sign.
    return det_sign(scale_rows_to_int(m, nullptr));
}

int rank(const RatMatrix& rows) { return static_cast<int>(pivot_columns(rows).size()); }

std::vector<int> pivot_columns(const RatMatrix& rows) {
    auto a = convert<Int>(scale_rows_to_int(rows, nullptr));
    std::vector<int> piv;
    bareiss_echelon(a, &piv, nullptr);
    return piv;
}

std::optional<Dependence> nullspace_dependence(const IntMatrix& vectors, int pivot) {
    if (vectors.empty()) return std::nullopt;
    std::optional<IntVector> c;
    try {
        c = kernel_impl<Small>(vectors);
    } catch (const Overflow&) {
        c = kernel_impl<Int>(vectors);
    }
    if (!c) return std::nullopt;
    return normalize(std::move(*c), pivot);
}

std::optional<Dependence> nullspace_dependence(const RatMatrix& vectors, int pivot) {
    std::vector<Int> factors;
    IntMatrix scaled = scale_rows_to_int(vectors, &factors);
    auto d = nullspace_dependence(scaled, pivot);
    if (!d) return d;
    IntVector c = d->coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= factors[i];
    return normalize(std::move(c), pivot);
}

std::optional<RatVector> solve_square(const RatMatrix& a_in, const RatVector& b) {
    const std::size_t n = a_in.size();
    RatMatrix a = a_in;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("solve_square: non-square matrix");
        a[i].push_back(b.at(i));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

namespace {

// Dense tableau for: minimize cost·x, A x = b, x >= 0, b >= 0.
class Tableau {
public:
    Tableau(RatMatrix a, RatVector b) : a_(std::move(a)), b_(std::move(b)) {}

    // Runs both phases; cost may be empty (pure feasibility). start[i] names a unit column
    // usable as the initial basic variable of row i, or -1 when row i needs an artificial.
    LpResult run(const RatVector& cost, std::size_t num_original, const std::vector<long>& start) {
        const std::size_t m = a_.size();
        const std::size_t n = num_original;
        std::size_t extra = 0;
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (start[i] >= 0) {
                basis_[i] = static_cast<std::size_t>(start[i]);
                continue;
            }
            for (auto& row : a_) row.resize(n + extra + 1);
            a_[i][n + extra] = 1;
            basis_[i] = n + extra;
            ++extra;
        }
        for (auto& row : a_) row.resize(n + extra);
        RatVector phase1(n + extra);
        for (std::size_t j = n; j < n + extra; ++j) phase1[j] = 1;
        if (!optimize(phase1, n + extra)) throw std::logic_error("phase 1 cannot be unbounded");
        Rational infeas = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (basis_[i] >= n) infeas += b_[i];
        LpResult res;
        if (sgn(infeas) > 0) {
            res.status = LpResult::Status::infeasible;
            return res;
        }
        // Drive zero-valued artificials out of the basis or drop redundant rows.
        for (std::size_t i = 0; i < basis_.size();) {
            if (basis_[i] < n) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < n && sgn(a_[i][j]) == 0) ++j;
            if (j == n) {
                a_.erase(a_.begin() + static_cast<long>(i));
                b_.erase(b_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
                continue;
            }
            pivot(i, j);
            ++i;
        }
        for (auto& row : a_) row.resize(n);
        res.status = LpResult::Status::feasible;
        if (!cost.empty() && !optimize(cost, n)) {
            res.status = LpResult::Status::unbounded;
        }
        res.x.assign(n, Rational(0));
        for (std::size_t i = 0; i < basis_.size(); ++i) res.x[basis_[i]] = b_[i];
        return res;
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        Rational p = a_[r][c];
        for (auto& x : a_[r]) x /= p;
        b_[r] /= p;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i == r || sgn(a_[i][c]) == 0) continue;
            Rational f = a_[i][c];
            for (std::size_t j = 0; j < a_[i].size(); ++j)
                if (sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
            b_[i] -= f * b_[r];
        }
        basis_[r] = c;
    }

    // Bland's rule; returns false when unbounded.
    bool optimize(const RatVector& cost, std::size_t ncols) {
        for (;;) {
            // Reduced costs: c_j - c_B B^{-1} A_j, with the tableau already in B^{-1} form.
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols && enter == ncols; ++j) {
                Rational rc = cost[j];
                for (std::size_t i = 0; i < basis_.size(); ++i)
                    if (sgn(a_[i][j]) != 0) rc -= cost[basis_[i]] * a_[i][j];
                if (sgn(rc) < 0) enter = j;
            }
            if (enter == ncols) return true;
            std::size_t leave = basis_.size();
            Rational best;
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                if (sgn(a_[i][enter]) <= 0) continue;
                Rational ratio = b_[i] / a_[i][enter];
                if (leave == basis_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == basis_.size()) return false;
            pivot(leave, enter);
        }
    }

    RatMatrix a_;
    RatVector b_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult simplex_nonneg(const RatMatrix& rows, const RatVector& rhs, const RatVector& objective) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : objective.size();
    if (rhs.size() != m) throw std::invalid_argument("simplex: rhs size mismatch");
    // A x - s = b with surplus s >= 0; rows with rhs <= 0 are negated so their surplus starts basic.
    RatMatrix a(m, RatVector(n + m));
    RatVector b(m);
    std::vector<long> start(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("simplex: ragged rows");
        int s = sgn(rhs[i]) <= 0 ? -1 : 1;
        if (s < 0) start[i] = static_cast<long>(n + i);
        for (std::size_t j = 0; j < n; ++j) a[i][j] = s * rows[i][j];
        a[i][n + i] = -s;
        b[i] = s * rhs[i];
    }
    RatVector cost;
    if (!objective.empty()) {
        cost.assign(n + m, Rational(0));
        for (std::size_t j = 0; j < n; ++j) cost[j] = objective[j];
    }
    if (m == 0) {
        LpResult r;
        r.status = LpResult::Status::feasible;
        r.x.assign(n, Rational(0));
        for (std::size_t j = 0; j < n && !objective.empty(); ++j)
            if (sgn(objective[j]) < 0) r.status = LpResult::Status::unbounded;
        return r;
    }
    Tableau t(std::move(a), std::move(b));
    LpResult r = t.run(cost, n + m, start);
    if (!r.x.empty()) r.x.resize(n);
    return r;
}

LpResult lp_feasible(const RatMatrix& rows, const RatVector& rhs) {
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    RatMatrix split(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        split[i] = rows[i];
        for (const auto& x : rows[i]) split[i].push_back(-x);
    }
    LpResult r = simplex_nonneg(split, rhs);
    if (!r.ok()) return r;
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
    r.x = std::move(x);
    return r;
}

}  // namespace nestfan
