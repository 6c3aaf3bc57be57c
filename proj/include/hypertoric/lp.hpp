#pragma once

#include "hypertoric/matrix.hpp"

namespace hypertoric {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status;
    Rat value;  // optimal objective (valid when status == Optimal)
    RatVec x;   // an optimal point (valid when status == Optimal)
};

// maximize c.x  subject to  A x = b, x >= 0.
// Exact rational two-phase simplex with Bland's pivoting rule; fully
// deterministic. Redundant equality rows are tolerated.
LpResult simplex_max(const RatMatrix& a, const RatVec& b, const RatVec& c);

}  // namespace hypertoric
