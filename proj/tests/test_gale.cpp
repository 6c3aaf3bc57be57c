#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoric/gale.hpp"
#include "hypertoric/instances.hpp"
#include "test_util.hpp"

using namespace hypertoric;
using namespace ht_test;

TEST_CASE("E1 dual data") {
    Instance e1 = instance_e1();
    DualData d = dual_data(e1.seq, e1.params);
    CHECK(d.dual_seq.inclusion == column({1, 1}));
    CHECK(d.dual_t == int_vec({-1}));  // dual slice y1 + y2 = -1
    CHECK(d.dual_m_lift == rat_vec({1, 0}));

    // Dual of the dual reproduces the primal data after canonicalization.
    DualData dd = dual_data(d.dual_seq, dual_params(d));
    CHECK(canonicalize(dd.dual_seq).projection == canonicalize(e1.seq).projection);
    CHECK(dd.dual_t == e1.params.t);
    RatVec m = to_rational(e1.seq.projection) * e1.params.m_lift;
    RatVec m2 = to_rational(dd.dual_seq.projection) * dd.dual_m_lift;
    CHECK(m == m2);  // same parameter, possibly a different canonical lift
}

TEST_CASE("E1 dual classification is the A_1 side") {
    Instance e1 = instance_e1();
    DualData d = dual_data(e1.seq, e1.params);
    PolarizedArrangement dual = validate_arrangement(d.dual_seq, dual_params(d));
    CHECK(dual.classify(0b00) == SignClass::FeasibleBounded);
    CHECK(dual.classify(0b01) == SignClass::FeasibleUnbounded);
    CHECK(dual.classify(0b10) == SignClass::FeasibleBounded);
    CHECK(dual.classify(0b11) == SignClass::Infeasible);
}

TEST_CASE("E2 dual is the 3-points-on-a-line arrangement") {
    Instance e2 = instance_e2();
    DualData d = dual_data(e2.seq, e2.params);
    CHECK(d.dual_seq.inclusion == from_rows({{1, 0, -1}, {0, 1, -1}}).transpose());
    CHECK(d.dual_t == int_vec({2, 1}));
    PolarizedArrangement dual = validate_arrangement(d.dual_seq, dual_params(d));
    // One line, three marked points: four chambers, bounded ones are the
    // complements of the primal category-O vertices.
    CHECK(dual.feasible() == std::vector<SignVector>{0b000, 0b001, 0b011, 0b111});
    CHECK(dual.feasible_bounded() == std::vector<SignVector>{0b000, 0b001, 0b011});
}

TEST_CASE("exchange theorem on fixtures") {
    Instance e1 = instance_e1();
    CHECK(verify_exchange(e1.seq, e1.params).empty());
    Instance e2 = instance_e2();
    CHECK(verify_exchange(e2.seq, e2.params).empty());
    // Trivial group vs whole torus.
    Instance tg = instance_trivial_group(2, rat_vec({-1, -1}));
    CHECK(verify_exchange(tg.seq, tg.params).empty());
}

TEST_CASE("exchange theorem on random generic instances") {
    InstanceGen gen(3);
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst = gen.next(5);
        CAPTURE(inst.seq.inclusion.str());
        CHECK(verify_exchange(inst.seq, inst.params).empty());
    }
}

TEST_CASE("dual_data round-trips on random instances") {
    InstanceGen gen(19);
    for (int trial = 0; trial < 20; ++trial) {
        Instance inst = gen.next(4);
        DualData d = dual_data(inst.seq, inst.params);
        DualData dd = dual_data(d.dual_seq, dual_params(d));
        CHECK(canonicalize(dd.dual_seq).projection == canonicalize(inst.seq).projection);
        CHECK(dd.dual_t == inst.params.t);
        RatVec m1 = to_rational(inst.seq.projection) * inst.params.m_lift;
        RatVec m2 = to_rational(dd.dual_seq.projection) * dd.dual_m_lift;
        CHECK(m1 == m2);
    }
}
