#include "hypertoric/lp.hpp"

namespace hypertoric {

namespace {

// Tableau with explicit basis; columns 0..nvar-1 are structural+artificial
// variables, last column is the rhs. Row operations keep basis columns unit.
struct Tableau {
    RatMatrix t;                     // m x (nvar+1)
    std::vector<std::size_t> basis;  // size m

    std::size_t m() const { return t.rows(); }
    std::size_t nvar() const { return t.cols() - 1; }

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = 1 / t(r, c);
        for (std::size_t j = 0; j < t.cols(); ++j) t(r, j) *= inv;
        for (std::size_t i = 0; i < t.rows(); ++i) {
            if (i == r || t(i, c) == 0) continue;
            Rat f = t(i, c);
            for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) -= f * t(r, j);
        }
        basis[r] = c;
    }
};

// Bland's rule: entering = lowest-index column with positive reduced cost;
// leaving = min ratio, ties by lowest basis variable index.
// Maximizes z = cost.x over the current tableau; cost has size nvar.
// Returns false when unbounded.
bool run_simplex(Tableau& tb, const RatVec& cost, std::size_t max_col) {
    for (;;) {
        // Reduced costs: cost_j - cost_B . column_j
        RatVec cb(tb.m());
        for (std::size_t i = 0; i < tb.m(); ++i) cb[i] = cost[tb.basis[i]];
        std::size_t enter = max_col;
        for (std::size_t j = 0; j < max_col; ++j) {
            Rat red = cost[j];
            for (std::size_t i = 0; i < tb.m(); ++i)
                if (tb.t(i, j) != 0) red -= cb[i] * tb.t(i, j);
            if (red > 0) {
                enter = j;
                break;
            }
        }
        if (enter == max_col) return true;  // optimal
        std::size_t leave = tb.m();
        Rat best;
        for (std::size_t i = 0; i < tb.m(); ++i) {
            if (tb.t(i, enter) <= 0) continue;
            Rat ratio = tb.t(i, tb.nvar()) / tb.t(i, enter);
            if (leave == tb.m() || ratio < best ||
                (ratio == best && tb.basis[i] < tb.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == tb.m()) return false;  // unbounded
        tb.pivot(leave, enter);
    }
}

}  // namespace

LpResult simplex_max(const RatMatrix& a, const RatVec& b, const RatVec& c) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n) throw Error("simplex: shape mismatch");

    // Phase 1: artificial variable per row, rhs made non-negative.
    Tableau tb;
    tb.t = RatMatrix(m, n + m + 1);
    tb.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        int sgn = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tb.t(i, j) = sgn * a(i, j);
        tb.t(i, n + i) = 1;
        tb.t(i, n + m) = sgn * b[i];
        tb.basis[i] = n + i;
    }
    RatVec phase1(n + m);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    run_simplex(tb, phase1, n + m);  // bounded below by construction
    Rat art_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] >= n) art_sum += tb.t(i, n + m);
    if (art_sum != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive remaining artificials out of the basis (degenerate rows).
    for (std::size_t i = 0; i < m; ++i) {
        if (tb.basis[i] < n) continue;
        std::size_t j = 0;
        while (j < n && tb.t(i, j) == 0) ++j;
        if (j < n) tb.pivot(i, j);
        // else: all-zero structural row (redundant); harmless to keep,
        // the artificial stays basic at value 0 and never re-enters.
    }

    // Phase 2.
    RatVec cost(n + m);
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    if (!run_simplex(tb, cost, n)) return {LpStatus::Unbounded, Rat(0), {}};

    RatVec x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] < n) x[tb.basis[i]] = tb.t(i, n + m);
    Rat val = 0;
    for (std::size_t j = 0; j < n; ++j) val += c[j] * x[j];
    return {LpStatus::Optimal, val, x};
}

}  // namespace hypertoric
