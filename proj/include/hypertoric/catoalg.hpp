#pragma once

#include <map>

#include "hypertoric/arrangement.hpp"
#include "hypertoric/ring.hpp"

namespace hypertoric {

// Betti: multiplicative monodromy coefficients in the Laurent group algebra
// Q[pi_1 F]. DeRham: the additive degeneration with polynomial coefficients.
enum class Side { Betti, DeRham };

// Coefficient ring data: mbar_i is the Laurent monomial with exponent
// P e_i (column i of the projection); xbar_i is the same column read as a
// linear form. flip[i] inverts the i-th exponent (orientation convention).
struct MonodromyRing {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<Expo> exps;
    std::vector<bool> flip;
};

MonodromyRing monodromy_ring(const ToriSequence& seq, std::vector<bool> flip = {});

// Crossing factor over the out-and-back coordinates {i : alpha_i = beta_i !=
// gamma_i}: prod (1 - mbar_i) on the Betti side, prod xbar_i on the de Rham
// side; 1 for the empty product.
Poly chi(const MonodromyRing& ring, SignVector alpha, SignVector gamma, SignVector beta);
Poly chi_add(const MonodromyRing& ring, SignVector alpha, SignVector gamma, SignVector beta);
Poly crossing_factor(const MonodromyRing& ring, Side side, SignVector alpha, SignVector gamma,
                     SignVector beta);

// Generators {crossing(alpha, gamma, beta) : gamma feasible and unbounded} of
// the component ideal J(alpha, beta).
std::vector<Poly> component_ideal_gens(const MonodromyRing& ring, Side side,
                                       const std::vector<SignVector>& unbounded_gammas,
                                       SignVector alpha, SignVector beta);

// One component e_alpha A e_beta of the quotient algebra: an Artinian
// quotient ring presented on its monomial staircase.
struct Component {
    SignVector src = 0, dst = 0;
    std::vector<Expo> basis;
    GroebnerBasis gb;
    std::vector<RatMatrix> var_mul;  // multiplication by x_i on the basis
    std::vector<RatMatrix> var_inv;  // inverses (Betti side: variables are units)
    std::size_t dim() const { return basis.size(); }
};

// Element of e_src A e_dst as coordinates over the component staircase.
struct WordElem {
    SignVector src = 0, dst = 0;
    RatVec coeff;
};

class CatOAlgebra {
  public:
    Side side = Side::Betti;
    MonodromyRing ring;
    std::vector<SignVector> vertices;   // feasible-bounded, ascending bitmask
    std::vector<SignVector> unbounded;  // feasible-unbounded gammas
    std::map<std::pair<SignVector, SignVector>, Component> components;

    const Component& component(SignVector a, SignVector b) const;
    std::size_t vertex_index(SignVector v) const;

    WordElem zero(SignVector a, SignVector b) const;
    WordElem unit_at(SignVector v) const;           // e_v
    WordElem word(SignVector a, SignVector b) const;  // class of 1 in (a, b)
    bool is_zero(const WordElem& w) const;

    // Class of a coefficient-ring element in a component (Laurent elements
    // allowed on the Betti side).
    RatVec reduce(const Component& comp, const Poly& f) const;
    Poly representative(const Component& comp, const RatVec& v) const;

    std::size_t total_dim() const;
    IntMatrix cartan() const;  // cartan(i, j) = dim e_{v_i} A e_{v_j}
};

// Builds the algebra on the feasible-bounded vertices; requires generic
// parameters. Throws NonGenericParameter / DimensionInfinite.
CatOAlgebra build_cato_algebra(const PolarizedArrangement& arr, Side side,
                               std::vector<bool> flip = {});

// Convolution product: a then b; requires a.dst == b.src.
WordElem multiply(const CatOAlgebra& alg, const WordElem& a, const WordElem& b);

struct DimensionDiff {
    SignVector src, dst;
    std::size_t betti_dim, derham_dim;
};

// Component-by-component dimension comparison of the two builds (the
// decategorified Riemann-Hilbert check); empty result = equal, including
// Cartan matrices.
std::vector<DimensionDiff> compare_dimensions(const PolarizedArrangement& arr);

}  // namespace hypertoric
