#pragma once

#include "hypertoric/matrix.hpp"

namespace hypertoric {

// Smith normal form: U*M*V = S with U, V unimodular, S diagonal with
// non-negative entries and divisibility chain d1 | d2 | ...
struct Snf {
    IntMatrix u, s, v;
    std::size_t rank() const {
        std::size_t r = 0, n = std::min(s.rows(), s.cols());
        while (r < n && s(r, r) != 0) ++r;
        return r;
    }
};

Snf smith_normal_form(const IntMatrix& m);

// True iff all SNF diagonal entries equal 1 (coker torsion-free).
// Requires full column rank; throws RankDeficient otherwise.
bool is_saturated(const IntMatrix& m);

// Unique row-style Hermite normal form of the lattice spanned by the rows of
// m: pivots positive, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped.
IntMatrix row_hnf(const IntMatrix& m);

// Canonical projection presenting coker(inclusion): P ((n-k) x n) with
// P*inclusion = 0, P surjective onto Z^{n-k}. Requires inclusion saturated
// with full column rank. Deterministic: the row HNF of the left-kernel
// lattice.
IntMatrix cokernel_projection(const IntMatrix& inclusion);

// 1 -> G -> (C*)^n -> F -> 1 on cocharacter lattices: inclusion holds a basis
// of g_Z in Z^n as columns, projection presents f_Z = Z^n / g_Z.
struct ToriSequence {
    std::size_t n = 0;     // ambient rank
    IntMatrix inclusion;   // n x k, full column rank, saturated
    IntMatrix projection;  // (n-k) x n, surjective, projection*inclusion = 0

    std::size_t k() const { return inclusion.cols(); }
    std::size_t corank() const { return n - inclusion.cols(); }
};

// Builds and validates a sequence; projection computed canonically when not
// supplied. Throws InvalidSequence / NotSaturated.
ToriSequence make_sequence(std::size_t n, const IntMatrix& inclusion);
ToriSequence make_sequence(std::size_t n, const IntMatrix& inclusion, const IntMatrix& projection);

// Replaces the projection by the canonical cokernel presentation.
ToriSequence canonicalize(const ToriSequence& seq);

// Dual sequence 1 -> F^v -> (C*)^n -> G^v -> 1: inclusion = projection^T,
// projection = inclusion^T.
ToriSequence gale_dual_sequence(const ToriSequence& seq);

// Every maximal minor of the canonicalized projection lies in {0, 1, -1}.
bool is_unimodular(const ToriSequence& seq);

// Deterministic particular rational solution of M x = target (SNF
// pseudo-solution); throws NoSolution when target is outside the column span.
RatVec solve_lift(const IntMatrix& m, const RatVec& target);

}  // namespace hypertoric
