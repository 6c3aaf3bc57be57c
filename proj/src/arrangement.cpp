#include "hypertoric/arrangement.hpp"

#include <algorithm>
#include <functional>

namespace hypertoric {

namespace {

constexpr std::size_t kMaxAmbient = 14;  // classification enumerates 2^n sign vectors

int sign_of(SignVector alpha, std::size_t i) { return (alpha >> i) & 1u ? 1 : -1; }

// Feasibility of the open region {I^T y = t, sign(y_i) = signs_i} with
// signs_i in {+1,0,-1}: substitute y_i = eps_i (s + w_i) on the strict
// coordinates and maximize the joint slack s.
bool region_realizable(const ToriSequence& seq, const IntVec& t, const std::vector<int>& signs) {
    std::size_t n = seq.n, k = seq.k();
    std::vector<std::size_t> strict;
    for (std::size_t i = 0; i < n; ++i)
        if (signs[i] != 0) strict.push_back(i);
    std::size_t ns = strict.size();
    // Columns: w_0..w_{ns-1}, s+, s-.
    RatMatrix a(k, ns + 2);
    RatVec b(k), c(ns + 2);
    for (std::size_t r = 0; r < k; ++r) {
        Rat srow = 0;
        for (std::size_t q = 0; q < ns; ++q) {
            std::size_t i = strict[q];
            Rat coef = Rat(seq.inclusion(i, r)) * signs[i];
            a(r, q) = coef;
            srow += coef;
        }
        a(r, ns) = srow;
        a(r, ns + 1) = -srow;
        b[r] = Rat(t[r]);
    }
    c[ns] = 1;
    c[ns + 1] = -1;
    LpResult res = simplex_max(a, b, c);
    if (res.status == LpStatus::Infeasible) return false;
    if (res.status == LpStatus::Unbounded) return true;
    return res.value > 0;
}

}  // namespace

PolarizedArrangement::PolarizedArrangement(ToriSequence seq, Params params)
    : seq_(std::move(seq)), params_(std::move(params)) {
    std::size_t n = seq_.n, k = seq_.k();
    if (params_.t.size() != k) throw InvalidSequence("t has wrong length");
    if (params_.m_lift.size() != n) throw InvalidSequence("m lift has wrong length");
    if (n > kMaxAmbient) throw ResourceLimit("ambient rank too large for sign-vector enumeration");

    // The slice {I^T y = t} is nonempty (I^T is surjective over Q); reject
    // hyperplanes containing it: y_i identically zero on the slice.
    RatMatrix it(k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < n; ++i) it(r, i) = Rat(seq_.inclusion(i, r));
    RatVec t_rat(k);
    for (std::size_t r = 0; r < k; ++r) t_rat[r] = Rat(params_.t[r]);
    RatVec y0 = solve(it, t_rat);
    auto ker = kernel_basis(it);
    for (std::size_t i = 0; i < n; ++i) {
        if (y0[i] != 0) continue;
        bool constant = true;
        for (const auto& v : ker)
            if (v[i] != 0) constant = false;
        if (constant) throw DegenerateHyperplane(int(i) + 1);
    }

    classification_.resize(std::size_t(1) << n);
    for (SignVector alpha = 0; alpha < classification_.size(); ++alpha) {
        if (!is_feasible(alpha))
            classification_[alpha] = SignClass::Infeasible;
        else
            classification_[alpha] = is_bounded_above(alpha) ? SignClass::FeasibleBounded
                                                             : SignClass::FeasibleUnbounded;
    }
}

PolarizedArrangement validate_arrangement(const ToriSequence& seq, const Params& params) {
    return PolarizedArrangement(seq, params);
}

bool PolarizedArrangement::is_feasible(SignVector alpha) const {
    std::vector<int> signs(n());
    for (std::size_t i = 0; i < n(); ++i) signs[i] = sign_of(alpha, i);
    return region_realizable(seq_, params_.t, signs);
}

bool PolarizedArrangement::is_bounded_above(SignVector alpha) const {
    // Recession cone {I^T r = 0, eps_i r_i >= 0}; bounded above iff
    // sup <m-hat, r> = 0 on the cone. Substitute z_i = eps_i r_i >= 0.
    std::size_t n = seq_.n, k = seq_.k();
    RatMatrix a(k, n);
    RatVec b(k), c(n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < n; ++i)
            a(r, i) = Rat(seq_.inclusion(i, r)) * sign_of(alpha, i);
    for (std::size_t i = 0; i < n; ++i) c[i] = params_.m_lift[i] * sign_of(alpha, i);
    LpResult res = simplex_max(a, b, c);
    return res.status == LpStatus::Optimal;  // optimum is 0 by homogeneity
}

bool PolarizedArrangement::covector_realizable(const std::vector<int>& signs) const {
    if (signs.size() != n()) throw Error("covector has wrong length");
    return region_realizable(seq_, params_.t, signs);
}

std::vector<SignVector> PolarizedArrangement::feasible() const {
    std::vector<SignVector> out;
    for (SignVector a = 0; a < classification_.size(); ++a)
        if (classification_[a] != SignClass::Infeasible) out.push_back(a);
    return out;
}

std::vector<SignVector> PolarizedArrangement::feasible_bounded() const {
    std::vector<SignVector> out;
    for (SignVector a = 0; a < classification_.size(); ++a)
        if (classification_[a] == SignClass::FeasibleBounded) out.push_back(a);
    return out;
}

std::vector<SignVector> PolarizedArrangement::feasible_unbounded() const {
    std::vector<SignVector> out;
    for (SignVector a = 0; a < classification_.size(); ++a)
        if (classification_[a] == SignClass::FeasibleUnbounded) out.push_back(a);
    return out;
}

namespace {

void subsets_of_size(std::size_t n, std::size_t r,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == r) {
            f(cur);
            return;
        }
        for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// Stacks I^T on top of the coordinate rows e_i, i in sub.
RatMatrix slice_system(const ToriSequence& seq, const std::vector<std::size_t>& sub) {
    std::size_t n = seq.n, k = seq.k();
    RatMatrix m(k + sub.size(), n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < n; ++i) m(r, i) = Rat(seq.inclusion(i, r));
    for (std::size_t q = 0; q < sub.size(); ++q) m(k + q, sub[q]) = 1;
    return m;
}

}  // namespace

bool is_simple(const ToriSequence& seq, const IntVec& t) {
    std::size_t n = seq.n, k = seq.k();
    if (t.size() != k) throw InvalidSequence("t has wrong length");
    std::size_t d = n - k;
    bool simple = true;
    // Size-d subsets: unique intersection point with the slice.
    subsets_of_size(n, d, [&](const std::vector<std::size_t>& sub) {
        if (!simple) return;
        if (rank(slice_system(seq, sub)) != n) simple = false;
    });
    if (!simple) return false;
    // Size-(d+1) subsets: empty intersection with the slice.
    if (d + 1 <= n) {
        subsets_of_size(n, d + 1, [&](const std::vector<std::size_t>& sub) {
            if (!simple) return;
            RatMatrix m = slice_system(seq, sub);
            RatVec rhs(m.rows());
            for (std::size_t r = 0; r < k; ++r) rhs[r] = Rat(t[r]);
            try {
                solve(m, rhs);
                simple = false;  // consistent: too many hyperplanes meet
            } catch (const NoSolution&) {
            }
        });
    }
    return simple;
}

bool is_polarization_generic(const PolarizedArrangement& arr) {
    if (!is_simple(arr.seq(), arr.params().t))
        throw NonGenericParameter("t is not simple");
    std::size_t n = arr.n(), k = arr.seq().k();
    std::size_t d = n - k;
    if (d == 0) return true;
    bool generic = true;
    // 1-dimensional flats: size-(d-1) subsets of hyperplanes; with t simple
    // the homogeneous system has a 1-dimensional solution space.
    subsets_of_size(n, d - 1, [&](const std::vector<std::size_t>& sub) {
        if (!generic) return;
        auto dirs = kernel_basis(slice_system(arr.seq(), sub));
        if (dirs.size() != 1) throw Error("unexpected flat dimension under simple t");
        Rat dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += arr.params().m_lift[i] * dirs[0][i];
        if (dot == 0) generic = false;
    });
    return generic;
}

void require_generic(const PolarizedArrangement& arr) {
    if (!is_simple(arr.seq(), arr.params().t))
        throw NonGenericParameter("t is not simple");
    if (!is_polarization_generic(arr))
        throw NonGenericParameter("m is constant on a 1-dimensional flat");
}

std::vector<Covector> enumerate_faces(const PolarizedArrangement& arr) {
    std::size_t n = arr.n();
    std::vector<Covector> faces;
    std::vector<int> signs(n);
    // Ternary enumeration of sign patterns, deterministic order.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            if (!arr.covector_realizable(signs)) return;
            Covector cv;
            cv.signs = signs;
            std::vector<std::size_t> zero;
            for (std::size_t q = 0; q < n; ++q)
                if (signs[q] == 0) zero.push_back(q);
            cv.dim = n - rank(slice_system(arr.seq(), zero));
            faces.push_back(std::move(cv));
            return;
        }
        for (int s : {-1, 0, 1}) {
            signs[i] = s;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(faces.begin(), faces.end(), [](const Covector& a, const Covector& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return a.signs < b.signs;
    });
    return faces;
}

std::size_t count_vertices(const PolarizedArrangement& arr) {
    if (!is_simple(arr.seq(), arr.params().t))
        throw NonGenericParameter("t is not simple");
    auto faces = enumerate_faces(arr);
    std::size_t count = 0;
    for (const auto& f : faces)
        if (f.dim == 0) ++count;
    return count;
}

SkeletonGraph skeleton_graph(const PolarizedArrangement& arr) {
    require_generic(arr);
    SkeletonGraph g;
    g.vertices = arr.feasible_bounded();
    for (SignVector alpha : g.vertices)
        for (std::size_t i = 0; i < arr.n(); ++i) {
            if (alpha & (1u << i)) continue;
            SignVector beta = alpha | (1u << i);
            if (arr.classify(beta) != SignClass::FeasibleBounded) continue;
            std::vector<int> wall(arr.n());
            for (std::size_t q = 0; q < arr.n(); ++q)
                wall[q] = q == i ? 0 : sign_of(alpha, q);
            if (arr.covector_realizable(wall)) g.edges.emplace_back(alpha, beta);
        }
    return g;
}

}  // namespace hypertoric
