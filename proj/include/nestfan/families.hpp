#pragma once

#include "nestfan/compat.hpp"
#include "nestfan/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nestfan {

// Diagonal (a, b), a < b, of the (n+3)-gon with vertices 0..n+2.
struct Diagonal {
    int a = 0, b = 0;
    bool operator==(const Diagonal& o) const { return a == o.a && b == o.b; }
    bool operator<(const Diagonal& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// Paths P_{n+1} (labels 1..n+1) and internal diagonals of Q_{n+3}.
std::vector<Diagonal> polygon_diagonals(int n);
Tube polygon_tube(const Graph& path, int n, Diagonal d);
Diagonal polygon_diagonal(const Graph& path, int n, const Tube& t);
bool diagonals_cross(Diagonal d, Diagonal e);

// Centrally symmetric pair of diagonals of R_{2n+2}; positions 0..2n+1 carry
// labels (p mod (n+1)) + 1. Stored by its lexicographically smaller representative.
struct SymDiagonal {
    Diagonal rep;
    bool long_diagonal = false;
    Diagonal mirror(int n) const;
    bool operator==(const SymDiagonal& o) const { return rep == o.rep; }
    bool operator<(const SymDiagonal& o) const { return rep < o.rep; }
};

std::vector<SymDiagonal> cycle_diagonals(int n);
SymDiagonal make_sym_diagonal(int n, Diagonal d);
// Cycle C_{n+1}, labels 1..n+1.
Tube cycle_tube(const Graph& cycle, int n, const SymDiagonal& p);
SymDiagonal cycle_diagonal(const Graph& cycle, int n, const Tube& t);
// Crossings of {δ, δ̄} with δ'; a long δ is counted once.
int cycle_crossings(int n, const SymDiagonal& d, const SymDiagonal& d_prime);

// Complete graph K_{n+1}, labels 1..n+1, initial tubing {[i] : i ∈ [n]}.
enum class LatticeKind { phi, psi };
// Heights of the horizontal steps above [i, i+1] for i = 0..n.
std::vector<int> complete_lattice_path(const Graph& complete, const Tube& t, LatticeKind which);
std::vector<VertexSet> ordered_partition(const Graph& complete, const Tubing& t);
std::string ordered_partition_string(const Graph& complete, const std::vector<VertexSet>& blocks);

struct Counts {
    Int proper_tubes;
    Int maximal_tubings;
    std::vector<Int> k_tubings;  // index k = 0..dimension, proper tubes only
    std::optional<Int> total;    // all tubings including the empty one
};

// kind ∈ {path, cycle, star}; the graph has n + 1 vertices.
Counts closed_form_counts(Family kind, int n);
Counts brute_force_counts(const Graph& g);
// Formulas printed for K_{n+1}: 2^n - 2, n!, k! S(n, k). They disagree with enumeration.
Counts complete_printed_counts(int n);

Int binomial(int n, int k);
Int stirling2(int n, int k);
Int factorial(int n);

// Flipped coefficients (α, α') of the form (k,k), (k,kp) or (kp+p,kp) with k, p > 0.
bool complete_flip_pattern(const Int& alpha, const Int& alpha_prime);

}  // namespace nestfan
