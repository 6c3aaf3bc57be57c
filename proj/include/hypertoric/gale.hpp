#pragma once

#include "hypertoric/arrangement.hpp"

namespace hypertoric {

// Gale-dual arrangement data: the dual slice is {y : P y = m}, the dual
// polarization is a lift t-hat of t with I^T t-hat = t. Sign vectors on the
// two sides are identified by complementation.
struct DualData {
    ToriSequence dual_seq;
    IntVec dual_t;        // = P * m-hat, the dual stability parameter
    RatVec dual_m_lift;   // = t-hat, the dual polarization lift
};

DualData dual_data(const ToriSequence& seq, const Params& params);

Params dual_params(const DualData& d);

SignVector complement(SignVector alpha, std::size_t n);

struct ExchangeViolation {
    SignVector alpha;
    std::string what;  // which of the two biconditionals failed
};

// Checks, for every alpha: feasible_primal(alpha) <=> bounded_dual(comp) and
// bounded_primal(alpha) <=> feasible_dual(comp). Empty list = theorem holds.
std::vector<ExchangeViolation> verify_exchange(const ToriSequence& seq, const Params& params);

}  // namespace hypertoric
