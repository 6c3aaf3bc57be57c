#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "hypertoric/matrix.hpp"

namespace hypertoric {

// Exponent vector; entries may be negative for Laurent elements.
using Expo = std::vector<std::int64_t>;

// Monomial orders: graded reverse lexicographic (x1 > ... > xd), optionally
// preceded by an elimination block on the first `elim` variables.
struct MonomialOrder {
    std::size_t elim = 0;
    // -1 / 0 / +1 for a < b / a == b / a > b.
    int cmp(const Expo& a, const Expo& b) const;
    bool greater(const Expo& a, const Expo& b) const { return cmp(a, b) > 0; }
};

// Exact multivariate polynomial / Laurent element over Q. Terms are stored in
// a canonical map keyed by exponent vector; the active monomial order is
// supplied to the operations that need one.
class Poly {
  public:
    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly monomial(std::size_t nvars, const Expo& e, const Rat& c);
    static Poly constant(std::size_t nvars, const Rat& c);
    static Poly one(std::size_t nvars) { return constant(nvars, 1); }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Poly scaled(const Rat& c) const;
    Poly shifted(const Expo& e) const;  // multiply by x^e

    bool has_negative_exponent() const;
    const Expo& leading_monomial(const MonomialOrder& ord) const;
    const Rat& coeff(const Expo& e) const;

    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    std::size_t nvars_;
    std::map<Expo, Rat> terms_;
};

struct GroebnerBasis {
    std::vector<Poly> gens;  // reduced basis, monic, sorted by leading monomial
    MonomialOrder order;
    std::size_t nvars = 0;
};

// Caps the Buchberger loop; throws ResourceLimit beyond.
std::size_t groebner_pair_limit();
void set_groebner_pair_limit(std::size_t limit);

// Reduced Groebner basis (deterministic; unique for the given order).
GroebnerBasis groebner(std::vector<Poly> gens, MonomialOrder order = {});

// Unique remainder of f modulo the basis.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);
bool ideal_membership(const Poly& f, const GroebnerBasis& gb);

// (I : mono^inf) by the extra-variable elimination method; result generators
// contain I.
std::vector<Poly> saturate_by_monomial(const std::vector<Poly>& gens, const Expo& mono);

struct QuotientBasis {
    bool finite = false;
    std::vector<Expo> monomials;  // staircase, sorted ascending in the order
};

// Monomial staircase of Q[x]/I from a grevlex reduced basis; finite = false
// when the quotient is infinite-dimensional.
QuotientBasis quotient_staircase(const GroebnerBasis& gb);

// Laurent quotient dimension: clears denominators, saturates by the product
// of all variables, then reads the staircase. In the Artinian quotient all
// variables are invertible, so this equals the Laurent quotient.
struct LaurentQuotient {
    bool finite = false;
    std::vector<Expo> monomials;
    GroebnerBasis gb;  // of the saturated polynomial ideal
};
LaurentQuotient laurent_quotient_basis(std::size_t nvars, const std::vector<Poly>& laurent_gens);

// f in the Laurent ideal generated by laurent_gens?
bool laurent_ideal_membership(const Poly& f, const std::vector<Poly>& laurent_gens);

// Multiplies the element by the monomial that clears negative exponents
// (a unit of the Laurent ring).
Poly clear_denominators(const Poly& laurent);

}  // namespace hypertoric
