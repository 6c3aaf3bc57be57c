#include "hypertoric/instances.hpp"

#include "hypertoric/gale.hpp"

namespace hypertoric {

Instance instance_e1() {
    IntMatrix inc(2, 1);
    inc(0, 0) = 1;
    inc(1, 0) = -1;
    return {make_sequence(2, inc), Params{{Int(1)}, {Rat(-1), Rat(0)}}};
}

Instance instance_e2() {
    IntMatrix inc(3, 1);
    inc(0, 0) = 1;
    inc(1, 0) = 1;
    inc(2, 0) = 1;
    return {make_sequence(3, inc), Params{{Int(1)}, {Rat(0), Rat(-1), Rat(-2)}}};
}

Instance instance_whole_torus(const IntVec& t) {
    std::size_t n = t.size();
    return {make_sequence(n, IntMatrix::identity(n)), Params{t, RatVec(n)}};
}

Instance instance_trivial_group(std::size_t n, const RatVec& m_lift) {
    return {make_sequence(n, IntMatrix(n, 0)), Params{{}, m_lift}};
}

std::uint64_t InstanceGen::draw(std::uint64_t bound) { return bound ? rng_() % bound : 0; }

long InstanceGen::draw_range(long lo, long hi) {
    return lo + long(draw(std::uint64_t(hi - lo + 1)));
}

Instance InstanceGen::next(std::size_t n_max) {
    if (n_max < 2) throw Error("instance generator needs n_max >= 2");
    std::size_t n = 2 + draw(n_max - 1);
    std::size_t k = 1 + draw(n - 1);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        // Sample the projection with entries in {-1,0,1} and take the
        // inclusion to be its kernel lattice; rejection keeps only the
        // unimodular arrangements (the smooth hypertoric regime, where the
        // cross-side comparison theorems live).
        std::size_t d = n - k;
        IntMatrix proj(d, n);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) proj(i, j) = draw_range(-1, 1);
        ToriSequence seq;
        try {
            if (rank(proj) != d) continue;
            IntMatrix pt = proj.transpose();
            if (!is_saturated(pt)) continue;
            IntMatrix inc = cokernel_projection(pt).transpose();
            seq = make_sequence(n, inc);
            if (!is_unimodular(seq)) continue;
        } catch (const Error&) {
            continue;
        }
        Params p;
        p.t.resize(k);
        p.m_lift.resize(n);
        for (std::size_t j = 0; j < k; ++j) p.t[j] = draw_range(-5, 5);
        for (std::size_t i = 0; i < n; ++i) p.m_lift[i] = Rat(draw_range(-5, 5));
        try {
            PolarizedArrangement arr = validate_arrangement(seq, p);
            if (!is_simple(seq, p.t) || !is_polarization_generic(arr)) continue;
            DualData dd = dual_data(seq, p);
            PolarizedArrangement dual = validate_arrangement(dd.dual_seq, dual_params(dd));
            if (!is_simple(dd.dual_seq, dd.dual_t) || !is_polarization_generic(dual)) continue;
        } catch (const Error&) {
            continue;
        }
        return {seq, p};
    }
    throw ResourceLimit("instance generator failed to find a generic instance");
}

}  // namespace hypertoric
