#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoric/catoalg.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/instances.hpp"
#include "test_util.hpp"

using namespace hypertoric;
using namespace ht_test;

namespace {

Poly P(std::size_t nvars, const std::vector<std::pair<long, Expo>>& terms) {
    Poly p(nvars);
    for (const auto& [c, e] : terms) p.add_term(e, Rat(c));
    return p;
}

IntMatrix imat(const std::vector<std::vector<long>>& rows) { return from_rows(rows); }

}  // namespace

TEST_CASE("monodromy ring of E1 and its dual") {
    Instance e1 = instance_e1();
    MonodromyRing r = monodromy_ring(e1.seq);
    CHECK(r.d == 1);
    CHECK(r.exps == std::vector<Expo>{{1}, {1}});

    MonodromyRing rd = monodromy_ring(gale_dual_sequence(e1.seq));
    CHECK(rd.exps == std::vector<Expo>{{1}, {-1}});
}

TEST_CASE("crossing factors") {
    Instance e1 = instance_e1();
    MonodromyRing r = monodromy_ring(e1.seq);
    // chi({1}, {}, {1}) = 1 - M
    CHECK(chi(r, 0b01, 0b00, 0b01) == P(1, {{1, {0}}, {-1, {1}}}));
    // chi(alpha, alpha, beta) = 1
    for (SignVector a = 0; a < 4; ++a)
        for (SignVector b = 0; b < 4; ++b) CHECK(chi(r, a, a, b) == Poly::one(1));
    // Dual ring: chi({2}, {1}, {2}) = (1 - M)(1 - M^-1)
    MonodromyRing rd = monodromy_ring(gale_dual_sequence(e1.seq));
    Poly expect = P(1, {{1, {0}}, {-1, {1}}}) * P(1, {{1, {0}}, {-1, {-1}}});
    CHECK(chi(rd, 0b10, 0b01, 0b10) == expect);

    // Additive side: chi_add({1}, {}, {1}) = x, chi_add({1,2}, {}, {1,2}) = x^2.
    CHECK(chi_add(r, 0b01, 0b00, 0b01) == P(1, {{1, {1}}}));
    CHECK(chi_add(r, 0b11, 0b00, 0b11) == P(1, {{1, {2}}}));
    for (SignVector a = 0; a < 4; ++a)
        for (SignVector b = 0; b < 4; ++b) CHECK(chi_add(r, a, a, b) == Poly::one(1));
}

TEST_CASE("component ideals of E1") {
    Instance e1 = instance_e1();
    PolarizedArrangement arr = validate_arrangement(e1.seq, e1.params);
    MonodromyRing r = monodromy_ring(e1.seq);
    auto unbounded = arr.feasible_unbounded();
    REQUIRE(unbounded == std::vector<SignVector>{0b00});

    // J({1},{1}) = <1 - M>, J({1,2},{1,2}) = <(1-M)^2>
    auto j11 = component_ideal_gens(r, Side::Betti, unbounded, 0b01, 0b01);
    REQUIRE(j11.size() == 1);
    CHECK(j11[0] == P(1, {{1, {0}}, {-1, {1}}}));
    auto j22 = component_ideal_gens(r, Side::Betti, unbounded, 0b11, 0b11);
    Poly omM = P(1, {{1, {0}}, {-1, {1}}});
    CHECK(j22[0] == omM * omM);
    // J(gamma, gamma) contains 1 for unbounded gamma (relation e_gamma = 0).
    auto jg = component_ideal_gens(r, Side::Betti, unbounded, 0b00, 0b00);
    CHECK(jg[0] == Poly::one(1));
}

TEST_CASE("E1 Betti algebra: dimension 5, Cartan [[1,1],[1,2]], v2 u2 = 0") {
    Instance e1 = instance_e1();
    PolarizedArrangement arr = validate_arrangement(e1.seq, e1.params);
    CatOAlgebra alg = build_cato_algebra(arr, Side::Betti);
    CHECK(alg.vertices == std::vector<SignVector>{0b01, 0b11});
    CHECK(alg.total_dim() == 5);
    CHECK(alg.cartan() == imat({{1, 1}, {1, 2}}));

    WordElem u = alg.word(0b01, 0b11);  // the arrow up across hyperplane 2
    WordElem v = alg.word(0b11, 0b01);
    WordElem uv = multiply(alg, u, v);
    CHECK(alg.is_zero(uv));  // the single relation of BGG category O for SL(2)

    WordElem vu = multiply(alg, v, u);
    CHECK_FALSE(alg.is_zero(vu));
    CHECK(alg.is_zero(multiply(alg, vu, vu)));  // (1-M)^2 = 0 at the top vertex

    // Unit laws.
    WordElem e1w = alg.unit_at(0b01), e2w = alg.unit_at(0b11);
    CHECK(multiply(alg, e1w, u).coeff == u.coeff);
    CHECK(multiply(alg, u, e2w).coeff == u.coeff);
    CHECK_THROWS_AS(multiply(alg, u, u), CompositionMismatch);
}

TEST_CASE("whole torus: one-dimensional algebra") {
    Instance gd = instance_whole_torus(int_vec({1, -1}));
    PolarizedArrangement arr = validate_arrangement(gd.seq, gd.params);
    CatOAlgebra alg = build_cato_algebra(arr, Side::Betti);
    CHECK(alg.total_dim() == 1);
    CHECK(alg.cartan() == imat({{1}}));
    CatOAlgebra dr = build_cato_algebra(arr, Side::DeRham);
    CHECK(dr.total_dim() == 1);
}

TEST_CASE("E2 Betti algebra: Cartan [[2,1,0],[1,2,1],[0,1,1]], total 9") {
    Instance e2 = instance_e2();
    PolarizedArrangement arr = validate_arrangement(e2.seq, e2.params);
    CatOAlgebra alg = build_cato_algebra(arr, Side::Betti);
    CHECK(alg.vertices == std::vector<SignVector>{0b100, 0b110, 0b111});
    CHECK(alg.cartan() == imat({{2, 1, 0}, {1, 2, 1}, {0, 1, 1}}));
    CHECK(alg.total_dim() == 9);
    CHECK(alg.component(0b100, 0b111).dim() == 0);
    CHECK(alg.component(0b100, 0b110).dim() == 1);
}

TEST_CASE("E1 and E2 de Rham algebras match the Betti dimensions") {
    Instance e1 = instance_e1();
    PolarizedArrangement arr1 = validate_arrangement(e1.seq, e1.params);
    CatOAlgebra dr1 = build_cato_algebra(arr1, Side::DeRham);
    CHECK(dr1.total_dim() == 5);
    CHECK(dr1.cartan() == imat({{1, 1}, {1, 2}}));
    // The crossing relation "out through the deleted chamber and back" is zero.
    WordElem u = dr1.word(0b01, 0b11), v = dr1.word(0b11, 0b01);
    CHECK(dr1.is_zero(multiply(dr1, u, v)));

    CHECK(compare_dimensions(arr1).empty());

    Instance e2 = instance_e2();
    PolarizedArrangement arr2 = validate_arrangement(e2.seq, e2.params);
    CatOAlgebra dr2 = build_cato_algebra(arr2, Side::DeRham);
    CHECK(dr2.cartan() == imat({{2, 1, 0}, {1, 2, 1}, {0, 1, 1}}));
    CHECK(dr2.total_dim() == 9);
    CHECK(compare_dimensions(arr2).empty());
}

TEST_CASE("non-generic parameters are refused") {
    Instance e1 = instance_e1();
    e1.params.t = int_vec({0});
    PolarizedArrangement arr = validate_arrangement(e1.seq, e1.params);
    CHECK_THROWS_AS(build_cato_algebra(arr, Side::Betti), NonGenericParameter);

    Instance e2 = instance_e2();
    e2.params.m_lift = rat_vec({1, 1, 1});  // lifts m = 0
    PolarizedArrangement arr2 = validate_arrangement(e2.seq, e2.params);
    CHECK_THROWS_AS(build_cato_algebra(arr2, Side::Betti), NonGenericParameter);
}

TEST_CASE("associativity and unit laws on random instances") {
    InstanceGen gen(59);
    for (int trial = 0; trial < 8; ++trial) {
        Instance inst = gen.next(4);
        PolarizedArrangement arr = validate_arrangement(inst.seq, inst.params);
        for (Side side : {Side::Betti, Side::DeRham}) {
            CatOAlgebra alg = build_cato_algebra(arr, side);
            auto& vs = alg.vertices;
            for (int rep = 0; rep < 30; ++rep) {
                SignVector a = vs[gen.draw(vs.size())], b = vs[gen.draw(vs.size())];
                SignVector c = vs[gen.draw(vs.size())], d = vs[gen.draw(vs.size())];
                auto rand_elem = [&](SignVector s, SignVector t) {
                    WordElem w = alg.zero(s, t);
                    for (auto& x : w.coeff) x = Rat(gen.draw_range(-2, 2));
                    return w;
                };
                WordElem x = rand_elem(a, b), y = rand_elem(b, c), z = rand_elem(c, d);
                WordElem left = multiply(alg, multiply(alg, x, y), z);
                WordElem right = multiply(alg, x, multiply(alg, y, z));
                CHECK(left.coeff == right.coeff);
                CHECK(multiply(alg, alg.unit_at(a), x).coeff == x.coeff);
                CHECK(multiply(alg, x, alg.unit_at(b)).coeff == x.coeff);
            }
        }
    }
}

TEST_CASE("cocycle divisibility: chi(a,d,g) chi(a,g,b) in <chi(a,d,b)>") {
    Instance e1 = instance_e1();
    MonodromyRing r1 = monodromy_ring(e1.seq);
    for (SignVector a = 0; a < 4; ++a)
        for (SignVector b = 0; b < 4; ++b)
            for (SignVector g = 0; g < 4; ++g)
                for (SignVector dd = 0; dd < 4; ++dd)
                    CHECK(laurent_ideal_membership(chi(r1, a, dd, g) * chi(r1, a, g, b),
                                                   {chi(r1, a, dd, b)}));

    InstanceGen gen(61);
    for (int trial = 0; trial < 3; ++trial) {
        Instance inst = gen.next(3);
        MonodromyRing r = monodromy_ring(inst.seq);
        SignVector top = SignVector(1) << inst.seq.n;
        for (SignVector a = 0; a < top; ++a)
            for (SignVector b = 0; b < top; ++b)
                for (SignVector g = 0; g < top; ++g)
                    for (SignVector dd = 0; dd < top; ++dd) {
                        CHECK(laurent_ideal_membership(chi(r, a, dd, g) * chi(r, a, g, b),
                                                       {chi(r, a, dd, b)}));
                        // Additive cocycle divisibility (polynomial side).
                        GroebnerBasis gb = groebner({chi_add(r, a, dd, b)});
                        CHECK(ideal_membership(chi_add(r, a, dd, g) * chi_add(r, a, g, b), gb));
                    }
    }
}

TEST_CASE("closed-basis model: geodesic products have coefficient 1") {
    // Pre-quotient rank-1 generation witness on the full cube, n <= 3.
    InstanceGen gen(67);
    for (int trial = 0; trial < 6; ++trial) {
        Instance inst = gen.next(3);
        MonodromyRing r = monodromy_ring(inst.seq);
        std::size_t n = inst.seq.n;
        for (SignVector a = 0; a < (SignVector(1) << n); ++a)
            for (SignVector b = 0; b < (SignVector(1) << n); ++b) {
                // Flip differing coordinates one at a time, ascending.
                Poly coeff = Poly::one(r.d);
                SignVector cur = a;
                for (std::size_t i = 0; i < n; ++i) {
                    if (((a ^ b) & (1u << i)) == 0) continue;
                    SignVector next = cur ^ (1u << i);
                    coeff = coeff * chi(r, a, cur, next);
                    cur = next;
                }
                CHECK(cur == b);
                CHECK(coeff == Poly::one(r.d));
            }
    }
}

TEST_CASE("orientation flips leave dimensions and Cartan matrices unchanged") {
    Instance e1 = instance_e1();
    PolarizedArrangement arr = validate_arrangement(e1.seq, e1.params);
    CatOAlgebra base = build_cato_algebra(arr, Side::Betti);
    for (unsigned mask = 1; mask < 4; ++mask) {
        std::vector<bool> flip = {bool(mask & 1), bool(mask & 2)};
        CatOAlgebra flipped = build_cato_algebra(arr, Side::Betti, flip);
        CHECK(flipped.total_dim() == base.total_dim());
        CHECK(flipped.cartan() == base.cartan());
        for (const auto& [key, comp] : base.components)
            CHECK(comp.dim() == flipped.component(key.first, key.second).dim());
    }

    InstanceGen gen(71);
    for (int trial = 0; trial < 4; ++trial) {
        Instance inst = gen.next(3);
        PolarizedArrangement rarr = validate_arrangement(inst.seq, inst.params);
        CatOAlgebra base2 = build_cato_algebra(rarr, Side::Betti);
        std::vector<bool> flip(inst.seq.n);
        for (std::size_t i = 0; i < inst.seq.n; ++i) flip[i] = gen.draw(2) == 1;
        CatOAlgebra flipped = build_cato_algebra(rarr, Side::Betti, flip);
        CHECK(flipped.cartan() == base2.cartan());
    }
}

TEST_CASE("dimension equality Betti vs de Rham on random instances") {
    InstanceGen gen(73);
    for (int trial = 0; trial < 10; ++trial) {
        Instance inst = gen.next(4);
        PolarizedArrangement arr = validate_arrangement(inst.seq, inst.params);
        CHECK(compare_dimensions(arr).empty());
    }
}
