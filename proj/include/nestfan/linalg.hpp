#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace nestfan {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

std::string to_string(const Rational& q);
IntVector to_int_vector(const std::vector<int>& v);
RatVector to_rat_vector(const std::vector<int>& v);
RatVector to_rat_vector(const IntVector& v);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);
int det_sign(const IntMatrix& m);
int det_sign(const RatMatrix& m);

// Rank of the matrix whose rows are given.
int rank(const RatMatrix& rows);
// Indices of columns forming a basis of the column space (leftmost choice).
std::vector<int> pivot_columns(const RatMatrix& rows);

// Primitive integer dependence among the given vectors (one coefficient per vector).
struct Dependence {
    IntVector coeffs;
    bool pivot_zero = false;
};

// Expects k vectors spanning a (k-1)-dimensional space; returns nullopt (rank deficient)
// otherwise. The pivot coefficient is made positive; if it vanishes, pivot_zero is set and
// the first non-zero coefficient is made positive instead.
std::optional<Dependence> nullspace_dependence(const IntMatrix& vectors, int pivot);
std::optional<Dependence> nullspace_dependence(const RatMatrix& vectors, int pivot);

// Solve A x = b for square non-singular A.
std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b);

struct LpResult {
    enum class Status { feasible, infeasible, unbounded };
    Status status = Status::infeasible;
    RatVector x;
    bool ok() const { return status == Status::feasible; }
};

// Feasibility of rows·x >= rhs with free variables (two-phase simplex, Bland's rule).
LpResult lp_feasible(const RatMatrix& rows, const RatVector& rhs);
// rows·x >= rhs, x >= 0, minimizing objective·x when an objective is given.
LpResult simplex_nonneg(const RatMatrix& rows, const RatVector& rhs, const RatVector& objective = {});

}  // namespace nestfan
