#include "hypertoric/gale.hpp"

namespace hypertoric {

SignVector complement(SignVector alpha, std::size_t n) {
    return (~alpha) & ((SignVector(1) << n) - 1);
}

DualData dual_data(const ToriSequence& seq, const Params& params) {
    DualData d;
    d.dual_seq = gale_dual_sequence(seq);
    // Dual stability parameter m = P * m-hat, expressed in the basis given by
    // the rows of P (= columns of the dual inclusion). Must be integral.
    RatVec m(seq.corank());
    for (std::size_t r = 0; r < seq.corank(); ++r)
        for (std::size_t i = 0; i < seq.n; ++i)
            m[r] += Rat(seq.projection(r, i)) * params.m_lift[i];
    d.dual_t.resize(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r].get_den() != 1)
            throw NoSolution("m lift does not project to an integral parameter");
        d.dual_t[r] = m[r].get_num();
    }
    // Dual polarization: canonical lift t-hat with I^T t-hat = t.
    RatVec t_rat(seq.k());
    for (std::size_t r = 0; r < seq.k(); ++r) t_rat[r] = Rat(params.t[r]);
    d.dual_m_lift = solve_lift(seq.inclusion.transpose(), t_rat);
    return d;
}

Params dual_params(const DualData& d) { return Params{d.dual_t, d.dual_m_lift}; }

std::vector<ExchangeViolation> verify_exchange(const ToriSequence& seq, const Params& params) {
    PolarizedArrangement primal = validate_arrangement(seq, params);
    DualData dd = dual_data(seq, params);
    PolarizedArrangement dual = validate_arrangement(dd.dual_seq, dual_params(dd));

    std::vector<ExchangeViolation> bad;
    std::size_t n = seq.n;
    for (SignVector alpha = 0; alpha < (SignVector(1) << n); ++alpha) {
        SignVector comp = complement(alpha, n);
        if (primal.is_feasible(alpha) != dual.is_bounded_above(comp))
            bad.push_back({alpha, "feasible(primal) <=> bounded(dual complement)"});
        if (primal.is_bounded_above(alpha) != dual.is_feasible(comp))
            bad.push_back({alpha, "bounded(primal) <=> feasible(dual complement)"});
    }
    return bad;
}

}  // namespace hypertoric
