#pragma once

#include "galg/groebner.hpp"

#include <map>
#include <string>
#include <vector>

namespace galg {

/// Highest weights of the two tensor factors; the first must dominate.
/// Pairs with lambda < mu are rejected (the ideal family is not symmetric in
/// the two weights), callers swap explicitly when needed.
struct WeightPair {
    int lambda = 0;
    int mu = 0;
    WeightPair(int lambda, int mu);
};

/// Generator indices of the two-point truncated sl2 algebra (e0,e1,h0,h1,f0,f1).
namespace sl2gen {
inline constexpr int e0 = 0, e1 = 1, h0 = 2, h1 = 3, f0 = 4, f1 = 5;
}

/// U(sl2 (x) C[t]/(t^2 - a t)) with generic parameter; total degree order with
/// priority f1 > f0 > h1 > h0 > e1 > e0.
GAlgebra fusion_algebra();
/// Same with the parameter evaluated (a0 = 0 gives t^2).
GAlgebra fusion_algebra_at(const Rat& a0);
/// Commutative Q(a)[f0, f1] with f1 > f0, as a G-algebra.
GAlgebra fusion_f_algebra();

/// The coefficient combinatorics attached to a weight pair:
///   m_i = lambda + mu + 1 - i,
///   c_{ji} = binom(m_i, j) * binom(mu - j, i - j),
///   p_i = -2 m_i (i+1) / (m_i - i - 1),  q_i = -2 m_i (mu-i) / (m_i - i - 1),
/// with p_mu = q_mu = 0 in the degenerate case lambda = mu = i.
struct FusionCoefficients {
    std::vector<long> m;                    // index 0 .. mu+1
    std::vector<std::vector<mpz_class>> c;  // c[i][j] = c_{ji}, 0 <= j <= i <= mu+1
    std::vector<Rat> p, q;                  // index 0 .. mu
};
FusionCoefficients fusion_coefficients(const WeightPair& w);

/// F_i = sum_k c_{ki} (-a)^{i-k} f1^k f0^{m_i - k}, homogeneous of degree m_i.
/// Valid for 0 <= i <= mu+1 (F_{mu+1} is a monomial multiple of f1^{mu+1},
/// zero when lambda = mu).  The generator indices default to the 6-generator
/// fusion algebra layout.
NcPoly f_polynomial(const GAlgebra& A, const WeightPair& w, int i, int f0_index = sl2gen::f0,
                    int f1_index = sl2gen::f1);

/// Term-by-term partial derivative; the support of f must lie on pairwise
/// commuting generators.
NcPoly formal_partial(const GAlgebra& A, const NcPoly& f, int var);

/// Generators of the defining left ideal of V(lambda)_0 (x) V(mu)_a in the
/// generic two-point algebra:
/// {e0, e1, h0-(lambda+mu), h1-mu*a, f0^(lambda+mu+1), f1^(mu+1), (f1-a*f0)^(lambda+1)}.
std::vector<NcPoly> ideal_Ia(const GAlgebra& A, const WeightPair& w);

/// Generators of the degenerate ideal in the t^2 truncation:
/// {e0, e1, h0-(lambda+mu), h1, f0^(lambda+mu+1), f1^(mu+1)}.
std::vector<NcPoly> ideal_I(const GAlgebra& A, const WeightPair& w);

/// {e0, e1, h0-(lambda+mu), h1-mu*a} + {F_i : 0 <= i <= mu} + {f1^(mu+1)}.
std::vector<NcPoly> claimed_groebner_basis(const GAlgebra& A, const WeightPair& w);

struct IdentityReport {
    struct Item {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_ok() const;
    std::vector<std::string> failures() const;
};

/// Verifies every commutator identity used by the Groebner argument against
/// the engine: the h/e brackets with f1^s f0^t (s, t <= 8), the brackets with
/// each F_i and with f1^(mu+1), and the full pairwise bracket list of the
/// basis elements.  A must be the generic fusion algebra.
IdentityReport verify_commutators(const GAlgebra& A, const WeightPair& w);

struct SampleResult {
    Rat a0;
    bool flat_ok;
};

struct TheoremReport {
    int lambda = 0, mu = 0;
    bool basis_matches = false;    // generic Buchberger output equals the claimed basis
    bool flat = false;             // specialized leading exponents match the generic ones
    bool degeneration_ok = false;  // a = 0 fiber is the expected monomial family and equals ideal_I
    bool dimensions_ok = false;    // staircase and graded counts
    long dimension = 0;
    std::map<long, long> graded;
    std::vector<std::string> basis_strings;  // canonical reduced basis over Q(a)
    std::vector<SampleResult> samples;
    std::string certificate;  // first failure, human-readable
    bool ok() const { return basis_matches && flat && degeneration_ok && dimensions_ok; }
};

/// End-to-end verification for one weight pair: (1) the generic reduced basis
/// equals the claimed one, (2) leading exponents are unchanged at each nonzero
/// sample point, (3) the a = 0 fiber degenerates to the monomial family and
/// ideal_I, (4) dimension (lambda+1)(mu+1) with graded dimensions
/// lambda+mu+1-2k.
TheoremReport verify_theorem(const WeightPair& w, const std::vector<Rat>& a_samples);

struct AdIdentityReport {
    int k = 0;
    bool ok = false;
    ExpVec monomial;      // of the reduced result
    Rat scalar;           // its coefficient
    mpz_class expected_magnitude;
    int sign = 0;         // sign of the computed scalar
    std::string detail;
};

/// Reduces (ad e1)^k f0^(lambda+mu+1) modulo the left ideal (e1, h1) in the
/// t^2 truncation and compares with the closed form
/// 2^k * prod_l binom(lambda+mu+1-2l, 2) * f1^k f0^(lambda+mu+1-2k), up to
/// sign; the computed sign is recorded.
AdIdentityReport ad_e1_identity(const WeightPair& w, int k);

}  // namespace galg
