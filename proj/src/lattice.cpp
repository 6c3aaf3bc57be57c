#include "hypertoric/lattice.hpp"

#include <algorithm>
#include <functional>

namespace hypertoric {

namespace {

// abs helper for mpz
Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero |entry| in s[t.., t..]; ties broken by (row, col). Returns
// false when the block is zero.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = iabs(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

Snf smith_normal_form(const IntMatrix& m) {
    Snf r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& s = r.s;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;
    std::size_t nmin = std::min(s.rows(), s.cols());

    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < s.cols(); ++c) s(dst, c) += f * s(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += f * u(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t rr = 0; rr < s.rows(); ++rr) s(rr, dst) += f * s(rr, src);
        for (std::size_t rr = 0; rr < v.rows(); ++rr) v(rr, dst) += f * v(rr, src);
    };
    auto swap_row = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        s.swap_rows(i, j);
        u.swap_rows(i, j);
    };
    auto swap_col = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        s.swap_cols(i, j);
        v.swap_cols(i, j);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) = -s(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    };

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            std::size_t pi, pj;
            if (!find_pivot(s, t, pi, pj)) {
                t = nmin;  // rest is zero
                break;
            }
            swap_row(t, pi);
            swap_col(t, pj);
            if (s(t, t) < 0) negate_row(t);

            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (s(i, t) != 0) clean = false;  // remainder smaller than pivot
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: pivot must divide the remaining block.
            bool divides = true;
            for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < s.cols() && divides; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        add_row(t, i, 1);  // pull the offending row up and redo
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= nmin) break;
    }
    return r;
}

bool is_saturated(const IntMatrix& m) {
    Snf f = smith_normal_form(m);
    if (f.rank() < m.cols()) throw RankDeficient("columns are linearly dependent");
    for (std::size_t i = 0; i < m.cols(); ++i)
        if (f.s(i, i) != 1) return false;
    return true;
}

IntMatrix row_hnf(const IntMatrix& m) {
    IntMatrix h = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // Euclid on column c below row r.
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                if (best == h.rows() || iabs(h(i, c)) < iabs(h(best, c))) best = i;
            }
            if (best == h.rows()) break;
            h.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) -= q * h(r, j);
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0)
            for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) -= q * h(r, j);
        }
        ++r;
    }
    IntMatrix out(r, h.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
    return out;
}

IntMatrix cokernel_projection(const IntMatrix& inclusion) {
    std::size_t n = inclusion.rows(), k = inclusion.cols();
    if (!is_saturated(inclusion))  // throws RankDeficient on dependent columns
        throw NotSaturated("inclusion is not saturated: cokernel has torsion");
    Snf f = smith_normal_form(inclusion);
    // Bottom n-k rows of U span the (saturated) left kernel lattice.
    IntMatrix ker(n - k, n);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n; ++j) ker(i, j) = f.u(k + i, j);
    return row_hnf(ker);
}

namespace {

void validate_sequence(const ToriSequence& seq) {
    std::size_t n = seq.n, k = seq.inclusion.cols();
    if (seq.inclusion.rows() != n || k > n) throw InvalidSequence("inclusion shape");
    if (seq.projection.rows() != n - k || seq.projection.cols() != n)
        throw InvalidSequence("projection shape");
    if (rank(seq.inclusion) != k) throw InvalidSequence("inclusion not of full column rank");
    if (!(seq.projection * seq.inclusion).is_zero())
        throw InvalidSequence("projection * inclusion != 0");
    if (!is_saturated(seq.inclusion))
        throw InvalidSequence("coker(inclusion) has torsion: F is not a torus");
    if (n - k > 0) {
        IntMatrix pt = seq.projection.transpose();
        if (rank(pt) != n - k) throw InvalidSequence("projection not of full row rank");
        if (!is_saturated(pt)) throw InvalidSequence("projection not surjective onto Z^(n-k)");
    }
}

}  // namespace

ToriSequence make_sequence(std::size_t n, const IntMatrix& inclusion) {
    ToriSequence seq{n, inclusion, cokernel_projection(inclusion)};
    validate_sequence(seq);
    return seq;
}

ToriSequence make_sequence(std::size_t n, const IntMatrix& inclusion, const IntMatrix& projection) {
    ToriSequence seq{n, inclusion, projection};
    validate_sequence(seq);
    return seq;
}

ToriSequence canonicalize(const ToriSequence& seq) {
    return ToriSequence{seq.n, seq.inclusion, cokernel_projection(seq.inclusion)};
}

ToriSequence gale_dual_sequence(const ToriSequence& seq) {
    ToriSequence dual{seq.n, seq.projection.transpose(), seq.inclusion.transpose()};
    try {
        validate_sequence(dual);
    } catch (const Error& e) {
        throw InvalidSequence(std::string("dual sequence invalid: ") + e.what());
    }
    return dual;
}

namespace {

// All size-r subsets of {0,..,n-1} in lexicographic order.
void subsets_rec(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
                 const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == r) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets_rec(n, r, i + 1, cur, f);
        cur.pop_back();
    }
}

}  // namespace

bool is_unimodular(const ToriSequence& seq) {
    validate_sequence(seq);
    IntMatrix p = cokernel_projection(seq.inclusion);
    std::size_t d = p.rows(), n = p.cols();
    if (d == 0) return true;
    bool ok = true;
    std::vector<std::size_t> cur;
    subsets_rec(n, d, 0, cur, [&](const std::vector<std::size_t>& cols) {
        if (!ok) return;
        IntMatrix sub(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sub(i, j) = p(i, cols[j]);
        Int dd = det(sub);
        if (dd > 1 || dd < -1) ok = false;
    });
    return ok;
}

RatVec solve_lift(const IntMatrix& m, const RatVec& target) {
    if (m.rows() != target.size()) throw Error("solve_lift: shape mismatch");
    Snf f = smith_normal_form(m);
    std::size_t rk = f.rank();
    // U m V = S, so m x = t  <=>  S (V^-1 x) = U t.
    RatVec ut(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            if (f.u(i, j) != 0) ut[i] += Rat(f.u(i, j)) * target[j];
    for (std::size_t i = rk; i < m.rows(); ++i)
        if (ut[i] != 0) throw NoSolution("target not in the rational column span");
    RatVec y(m.cols());
    for (std::size_t i = 0; i < rk && i < m.cols(); ++i) y[i] = ut[i] / Rat(f.s(i, i));
    RatVec x(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (f.v(i, j) != 0) x[i] += Rat(f.v(i, j)) * y[j];
    return x;
}

}  // namespace hypertoric
