#pragma once

#include <random>

#include "hypertoric/arrangement.hpp"

namespace hypertoric {

struct Instance {
    ToriSequence seq;
    Params params;
};

// n=2, G the kernel of multiplication (inclusion (1,-1)), t = 1,
// m-hat = (-1,0): the SL(2)-type fixture.
Instance instance_e1();

// n=3, G the diagonal torus (inclusion (1,1,1)), t = 1, m-hat = (0,-1,-2):
// the T*P^2 fixture; its Gale dual is the 3-points-on-a-line arrangement.
Instance instance_e2();

// G = D: inclusion = identity(n).
Instance instance_whole_torus(const IntVec& t);

// G trivial: k = 0, arrangement of coordinate hyperplanes in R^n.
Instance instance_trivial_group(std::size_t n, const RatVec& m_lift);

// Deterministic random instances: saturated inclusion with entries in [-3,3],
// integral parameters rejected until generic on both the primal and the dual
// side. Cross-platform reproducible (no std distributions).
class InstanceGen {
  public:
    explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

    Instance next(std::size_t n_max);

    std::uint64_t draw(std::uint64_t bound);           // uniform in [0, bound)
    long draw_range(long lo, long hi);                 // uniform in [lo, hi]

  private:
    std::mt19937_64 rng_;
};

}  // namespace hypertoric
