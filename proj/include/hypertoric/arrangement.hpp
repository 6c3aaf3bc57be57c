#pragma once

#include <cstdint>

#include "hypertoric/lattice.hpp"
#include "hypertoric/lp.hpp"

namespace hypertoric {

// Sign vectors are subsets of {1,..,n} as bitmasks: bit i-1 set <=> i in alpha,
// i.e. coordinate i is constrained positive. (+,...,+) is the full set.
using SignVector = std::uint32_t;

struct Params {
    IntVec t;       // length k, in the dual basis of the inclusion's columns
    RatVec m_lift;  // length n, a lift m-hat with projection * m-hat = m
};

enum class SignClass { Infeasible, FeasibleBounded, FeasibleUnbounded };

// A face of the arrangement: sign in {+1,0,-1} per coordinate, with nonempty
// relatively open realization on the slice.
struct Covector {
    std::vector<int> signs;
    std::size_t dim = 0;  // dimension of the realization
};

struct SkeletonGraph {
    std::vector<SignVector> vertices;                       // sorted bitmasks
    std::vector<std::pair<SignVector, SignVector>> edges;   // (alpha, alpha | {i})
};

class PolarizedArrangement {
  public:
    PolarizedArrangement(ToriSequence seq, Params params);  // validates

    const ToriSequence& seq() const { return seq_; }
    const Params& params() const { return params_; }
    std::size_t n() const { return seq_.n; }
    std::size_t slice_dim() const { return seq_.n - seq_.k(); }

    bool is_feasible(SignVector alpha) const;
    bool is_bounded_above(SignVector alpha) const;
    SignClass classify(SignVector alpha) const { return classification_[alpha]; }
    const std::vector<SignClass>& classification() const { return classification_; }

    std::vector<SignVector> feasible() const;
    std::vector<SignVector> feasible_bounded() const;    // the vertices of category O
    std::vector<SignVector> feasible_unbounded() const;

    // True iff the covector (given as full sign pattern) has nonempty
    // relatively open realization on the slice.
    bool covector_realizable(const std::vector<int>& signs) const;

  private:
    ToriSequence seq_;
    Params params_;
    std::vector<SignClass> classification_;
};

// Validates and classifies; throws DegenerateHyperplane / InvalidSequence.
PolarizedArrangement validate_arrangement(const ToriSequence& seq, const Params& params);

// Every (n-k)-subset of hyperplanes meets the slice in one point and every
// (n-k+1)-subset has empty intersection with it.
bool is_simple(const ToriSequence& seq, const IntVec& t);

// m-hat non-constant on every 1-dimensional flat; throws
// NonGenericParameter if t is not simple.
bool is_polarization_generic(const PolarizedArrangement& arr);

// Both genericity conditions; throws NonGenericParameter describing the first
// failure. Used as the precondition of the algebra builders.
void require_generic(const PolarizedArrangement& arr);

std::vector<Covector> enumerate_faces(const PolarizedArrangement& arr);
std::size_t count_vertices(const PolarizedArrangement& arr);
SkeletonGraph skeleton_graph(const PolarizedArrangement& arr);

}  // namespace hypertoric
