#pragma once

// Fourier-Motzkin feasibility oracle used by the tests as an independent
// check on the simplex-based classification. Handles strict and non-strict
// inequalities over exact rationals.

#include <vector>

#include "hypertoric/arrangement.hpp"

namespace ht_test {

using hypertoric::Rat;
using hypertoric::RatVec;

struct FmConstraint {
    RatVec a;     // a . y  (<= | <)  b
    Rat b;
    bool strict;
};

// Satisfiability of a system of linear inequalities by variable elimination.
inline bool fm_feasible(std::vector<FmConstraint> cons, std::size_t nvars) {
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<FmConstraint> keep, lower, upper;
        for (auto& c : cons) {
            if (c.a[v] == 0)
                keep.push_back(c);
            else if (c.a[v] > 0)
                upper.push_back(c);
            else
                lower.push_back(c);
        }
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // Cross-multiply to eliminate y_v: up.a[v] > 0 > lo.a[v].
                FmConstraint c;
                c.a.assign(nvars, Rat(0));
                Rat cl = -lo.a[v], cu = up.a[v];
                for (std::size_t j = 0; j < nvars; ++j) c.a[j] = cl * up.a[j] + cu * lo.a[j];
                c.b = cl * up.b + cu * lo.b;
                c.strict = lo.strict || up.strict;
                keep.push_back(std::move(c));
            }
        cons = std::move(keep);
    }
    for (const auto& c : cons) {
        if (c.strict ? !(Rat(0) < c.b) : !(Rat(0) <= c.b)) return false;
    }
    return true;
}

// Chamber feasibility oracle: exists y with I^T y = t and eps_i y_i > 0.
inline bool fm_chamber_feasible(const hypertoric::ToriSequence& seq, const hypertoric::IntVec& t,
                                hypertoric::SignVector alpha) {
    std::size_t n = seq.n, k = seq.k();
    std::vector<FmConstraint> cons;
    for (std::size_t r = 0; r < k; ++r) {
        FmConstraint le{RatVec(n), Rat(t[r]), false}, ge{RatVec(n), Rat(-t[r]), false};
        for (std::size_t i = 0; i < n; ++i) {
            le.a[i] = Rat(seq.inclusion(i, r));
            ge.a[i] = -le.a[i];
        }
        cons.push_back(le);
        cons.push_back(ge);
    }
    for (std::size_t i = 0; i < n; ++i) {
        FmConstraint c{RatVec(n), Rat(0), true};
        c.a[i] = (alpha >> i) & 1u ? Rat(-1) : Rat(1);  // eps_i y_i > 0
        cons.push_back(c);
    }
    return fm_feasible(std::move(cons), n);
}

// Boundedness oracle: alpha is m-unbounded iff the recession cone contains a
// direction with <m-hat, r> >= 1.
inline bool fm_chamber_bounded(const hypertoric::ToriSequence& seq, const hypertoric::RatVec& mlift,
                               hypertoric::SignVector alpha) {
    std::size_t n = seq.n, k = seq.k();
    std::vector<FmConstraint> cons;
    for (std::size_t r = 0; r < k; ++r) {
        FmConstraint le{RatVec(n), Rat(0), false}, ge{RatVec(n), Rat(0), false};
        for (std::size_t i = 0; i < n; ++i) {
            le.a[i] = Rat(seq.inclusion(i, r));
            ge.a[i] = -le.a[i];
        }
        cons.push_back(le);
        cons.push_back(ge);
    }
    for (std::size_t i = 0; i < n; ++i) {
        FmConstraint c{RatVec(n), Rat(0), false};
        c.a[i] = (alpha >> i) & 1u ? Rat(-1) : Rat(1);  // eps_i r_i >= 0
        cons.push_back(c);
    }
    FmConstraint witness{RatVec(n), Rat(-1), false};  // <m-hat, r> >= 1
    for (std::size_t i = 0; i < n; ++i) witness.a[i] = -mlift[i];
    cons.push_back(witness);
    return !fm_feasible(std::move(cons), n);
}

}  // namespace ht_test
