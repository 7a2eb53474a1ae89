#pragma once

#include "galg/galgebra.hpp"

#include <map>
#include <span>
#include <vector>

namespace galg {

/// A left Groebner basis; elements are monic.  When `reduced` holds, no term
/// of any element is divisible by the leading exponent of another element and
/// the elements are sorted ascending by leading exponent, which makes the
/// basis the unique canonical one for its ideal and order.
struct LeftGB {
    const GAlgebra* algebra = nullptr;
    std::vector<NcPoly> elements;
    bool reduced = false;
};

struct BuchbergerOpts {
    /// In Lie type, process pairs with variable-disjoint leading monomials by
    /// reducing the commutator instead of the s-polynomial.
    bool use_product_criterion = true;
};

/// Remainder of the left division of f by G: no term of the result is
/// divisible by any lexp(g).  Deterministic: the leading reducible term is
/// cancelled first, always against the first eligible divisor in G's stored
/// sequence.  f minus the result lies in the left ideal generated by G.
NcPoly left_normal_form(const GAlgebra& A, const NcPoly& f, std::span<const NcPoly> G);
NcPoly left_normal_form(const GAlgebra& A, const NcPoly& f, const std::vector<NcPoly>& G);
NcPoly left_normal_form(const GAlgebra& A, const NcPoly& f, const LeftGB& G);

/// Monic combination  x^(lcm-lexp f)/lc * f  -  x^(lcm-lexp g)/lc * g  whose
/// leading terms cancel.  Throws on zero input.
NcPoly spoly(const GAlgebra& A, const NcPoly& f, const NcPoly& g);

/// Generalized Buchberger loop, normal pair-selection strategy (smallest lcm
/// in the monomial order first).  Returns the reduced basis.
LeftGB left_buchberger(const GAlgebra& A, const std::vector<NcPoly>& gens,
                       BuchbergerOpts opts = {});

/// Canonical form of a Groebner basis: minimal, tail-reduced, monic, sorted
/// ascending by leading exponent.  pre: G is a Groebner basis.
LeftGB interreduce(const GAlgebra& A, std::vector<NcPoly> G);

/// Commutative monomial ideal given by a minimal generating set of exponents.
struct MonomialIdeal {
    int width = 0;
    std::vector<ExpVec> gens;  // no generator divides another
};

/// Minimal componentwise-divisibility generators of {lexp(g) : g in G}.
MonomialIdeal leading_term_ideal(const GAlgebra& A, const LeftGB& G);
MonomialIdeal leading_term_ideal(const MonomialOrder& ord, const std::vector<NcPoly>& G);

struct Staircase {
    bool finite = false;
    long count = 0;                 // meaningful when finite
    std::vector<ExpVec> monomials;  // the standard monomials when finite
};

/// Monomials outside the ideal; finite iff every variable has a pure power
/// among the generators.
Staircase staircase(const MonomialIdeal& M);

/// Standard-monomial counts by weighted degree; throws std::domain_error when
/// the staircase is infinite.
std::map<long, long> graded_dimensions(const MonomialIdeal& M, const std::vector<long>& weights);

/// Normal form against a Groebner basis is zero.  pre: G is a Groebner basis.
bool is_member(const GAlgebra& A, const NcPoly& f, const LeftGB& G);

/// Mutual membership of each generator set in the other's Groebner basis.
bool ideals_equal(const GAlgebra& A, const std::vector<NcPoly>& gens1,
                  const std::vector<NcPoly>& gens2);

}  // namespace galg
