#include "hypertoric/catoalg.hpp"

#include <algorithm>

namespace hypertoric {

MonodromyRing monodromy_ring(const ToriSequence& seq, std::vector<bool> flip) {
    MonodromyRing r;
    r.n = seq.n;
    r.d = seq.corank();
    if (flip.empty()) flip.assign(r.n, false);
    if (flip.size() != r.n) throw Error("flip vector has wrong length");
    r.flip = std::move(flip);
    r.exps.resize(r.n, Expo(r.d, 0));
    for (std::size_t i = 0; i < r.n; ++i)
        for (std::size_t j = 0; j < r.d; ++j) {
            if (!seq.projection(j, i).fits_slong_p())
                throw ResourceLimit("projection entry too large for exponents");
            r.exps[i][j] = seq.projection(j, i).get_si();
        }
    // The exponent map kills the image of the inclusion.
    if (!(seq.projection * seq.inclusion).is_zero())
        throw InvalidSequence("monodromy exponents do not kill im(inclusion)");
    return r;
}

namespace {

std::vector<std::size_t> crossing_coords(std::size_t n, SignVector alpha, SignVector gamma,
                                         SignVector beta) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        bool a = alpha & (1u << i), g = gamma & (1u << i), b = beta & (1u << i);
        if (a == b && a != g) out.push_back(i);
    }
    return out;
}

}  // namespace

Poly chi(const MonodromyRing& ring, SignVector alpha, SignVector gamma, SignVector beta) {
    Poly p = Poly::one(ring.d);
    for (std::size_t i : crossing_coords(ring.n, alpha, gamma, beta)) {
        Poly factor = Poly::one(ring.d);
        Expo e = ring.exps[i];
        if (ring.flip[i])
            for (auto& x : e) x = -x;
        factor.add_term(e, Rat(-1));  // 1 - mbar_i
        p = p * factor;
    }
    return p;
}

Poly chi_add(const MonodromyRing& ring, SignVector alpha, SignVector gamma, SignVector beta) {
    Poly p = Poly::one(ring.d);
    for (std::size_t i : crossing_coords(ring.n, alpha, gamma, beta)) {
        Poly factor(ring.d);
        for (std::size_t j = 0; j < ring.d; ++j) {
            Expo e(ring.d, 0);
            e[j] = 1;
            factor.add_term(e, Rat(ring.flip[i] ? -ring.exps[i][j] : ring.exps[i][j]));
        }
        p = p * factor;  // xbar_i
    }
    return p;
}

Poly crossing_factor(const MonodromyRing& ring, Side side, SignVector alpha, SignVector gamma,
                     SignVector beta) {
    return side == Side::Betti ? chi(ring, alpha, gamma, beta)
                               : chi_add(ring, alpha, gamma, beta);
}

std::vector<Poly> component_ideal_gens(const MonodromyRing& ring, Side side,
                                       const std::vector<SignVector>& unbounded_gammas,
                                       SignVector alpha, SignVector beta) {
    std::vector<Poly> gens;
    for (SignVector g : unbounded_gammas) gens.push_back(crossing_factor(ring, side, alpha, g, beta));
    return gens;
}

namespace {

// Inverse of a square rational matrix; throws on singular input.
RatMatrix invert(const RatMatrix& m) {
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw Error("matrix not invertible");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Component build_component(const MonodromyRing& ring, Side side,
                          const std::vector<SignVector>& unbounded, SignVector a, SignVector b) {
    Component comp;
    comp.src = a;
    comp.dst = b;
    std::vector<Poly> gens = component_ideal_gens(ring, side, unbounded, a, b);
    if (side == Side::Betti) {
        LaurentQuotient q = laurent_quotient_basis(ring.d, gens);
        if (!q.finite)
            throw DimensionInfinite(a, b, "component dimension is infinite");
        comp.basis = std::move(q.monomials);
        comp.gb = std::move(q.gb);
    } else {
        GroebnerBasis gb = groebner(gens, MonomialOrder{});
        QuotientBasis q = quotient_staircase(gb);
        if (!q.finite)
            throw DimensionInfinite(a, b, "component dimension is infinite");
        comp.basis = std::move(q.monomials);
        comp.gb = std::move(gb);
    }

    // Staircase coordinates and multiplication-by-variable matrices.
    std::map<Expo, std::size_t> index;
    for (std::size_t i = 0; i < comp.basis.size(); ++i) index[comp.basis[i]] = i;
    std::size_t dim = comp.basis.size();
    comp.var_mul.assign(ring.d, RatMatrix(dim, dim));
    for (std::size_t v = 0; v < ring.d; ++v) {
        for (std::size_t j = 0; j < dim; ++j) {
            Expo e = comp.basis[j];
            e[v] += 1;
            Poly nf = normal_form(Poly::monomial(ring.d, e, Rat(1)), comp.gb);
            for (const auto& [mon, c] : nf.terms()) comp.var_mul[v](index.at(mon), j) = c;
        }
    }
    if (side == Side::Betti) {
        comp.var_inv.reserve(ring.d);
        for (std::size_t v = 0; v < ring.d; ++v) comp.var_inv.push_back(invert(comp.var_mul[v]));
    }
    return comp;
}

}  // namespace

const Component& CatOAlgebra::component(SignVector a, SignVector b) const {
    auto it = components.find({a, b});
    if (it == components.end()) throw Error("no such component");
    return it->second;
}

std::size_t CatOAlgebra::vertex_index(SignVector v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw Error("not a vertex");
    return std::size_t(it - vertices.begin());
}

WordElem CatOAlgebra::zero(SignVector a, SignVector b) const {
    return WordElem{a, b, RatVec(component(a, b).dim())};
}

WordElem CatOAlgebra::word(SignVector a, SignVector b) const {
    const Component& comp = component(a, b);
    WordElem w{a, b, RatVec(comp.dim())};
    w.coeff = reduce(comp, Poly::one(ring.d));
    return w;
}

WordElem CatOAlgebra::unit_at(SignVector v) const { return word(v, v); }

bool CatOAlgebra::is_zero(const WordElem& w) const {
    for (const auto& c : w.coeff)
        if (c != 0) return false;
    return true;
}

RatVec CatOAlgebra::reduce(const Component& comp, const Poly& f) const {
    RatVec out(comp.dim());
    if (comp.dim() == 0) return out;
    std::map<Expo, std::size_t> index;
    for (std::size_t i = 0; i < comp.basis.size(); ++i) index[comp.basis[i]] = i;
    for (const auto& [e, c] : f.terms()) {
        Expo pos(ring.d, 0), neg(ring.d, 0);
        for (std::size_t i = 0; i < ring.d; ++i)
            (e[i] >= 0 ? pos[i] : neg[i]) = e[i] >= 0 ? e[i] : -e[i];
        Poly nf = normal_form(Poly::monomial(ring.d, pos, c), comp.gb);
        RatVec v(comp.dim());
        for (const auto& [mon, k] : nf.terms()) v[index.at(mon)] = k;
        for (std::size_t i = 0; i < ring.d; ++i)
            for (std::int64_t rep = 0; rep < neg[i]; ++rep) {
                if (comp.var_inv.empty()) throw Error("negative exponent in polynomial component");
                v = comp.var_inv[i] * v;
            }
        for (std::size_t i = 0; i < comp.dim(); ++i) out[i] += v[i];
    }
    return out;
}

Poly CatOAlgebra::representative(const Component& comp, const RatVec& v) const {
    Poly p(ring.d);
    for (std::size_t i = 0; i < comp.basis.size(); ++i) p.add_term(comp.basis[i], v[i]);
    return p;
}

std::size_t CatOAlgebra::total_dim() const {
    std::size_t t = 0;
    for (const auto& [k, c] : components) t += c.dim();
    return t;
}

IntMatrix CatOAlgebra::cartan() const {
    IntMatrix m(vertices.size(), vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            m(i, j) = long(component(vertices[i], vertices[j]).dim());
    return m;
}

CatOAlgebra build_cato_algebra(const PolarizedArrangement& arr, Side side,
                               std::vector<bool> flip) {
    require_generic(arr);
    CatOAlgebra alg;
    alg.side = side;
    alg.ring = monodromy_ring(arr.seq(), std::move(flip));
    alg.vertices = arr.feasible_bounded();
    alg.unbounded = arr.feasible_unbounded();
    for (SignVector a : alg.vertices)
        for (SignVector b : alg.vertices)
            alg.components.emplace(std::make_pair(a, b),
                                   build_component(alg.ring, side, alg.unbounded, a, b));
    return alg;
}

WordElem multiply(const CatOAlgebra& alg, const WordElem& a, const WordElem& b) {
    if (a.dst != b.src) throw CompositionMismatch("a.target != b.source");
    const Component& ca = alg.component(a.src, a.dst);
    const Component& cb = alg.component(b.src, b.dst);
    const Component& target = alg.component(a.src, b.dst);
    Poly prod = crossing_factor(alg.ring, alg.side, a.src, a.dst, b.dst) *
                alg.representative(ca, a.coeff) * alg.representative(cb, b.coeff);
    return WordElem{a.src, b.dst, alg.reduce(target, prod)};
}

std::vector<DimensionDiff> compare_dimensions(const PolarizedArrangement& arr) {
    CatOAlgebra betti = build_cato_algebra(arr, Side::Betti);
    CatOAlgebra derham = build_cato_algebra(arr, Side::DeRham);
    std::vector<DimensionDiff> diffs;
    for (const auto& [key, comp] : betti.components) {
        std::size_t db = comp.dim();
        std::size_t dd = derham.component(key.first, key.second).dim();
        if (db != dd) diffs.push_back({key.first, key.second, db, dd});
    }
    return diffs;
}

}  // namespace hypertoric
