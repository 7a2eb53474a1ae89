#include "galg/fusion.hpp"

#include "galg/parse.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace galg;
using namespace galg::sl2gen;

namespace {

NcPoly pp(const GAlgebra& A, const std::string& s) { return parse_poly(A, s); }

std::vector<std::string> strs(const GAlgebra& A, const std::vector<NcPoly>& v) {
    std::vector<std::string> out;
    for (const NcPoly& g : v) out.push_back(poly_str(A, g));
    return out;
}

}  // namespace

TEST_CASE("weight pairs require lambda >= mu >= 0") {
    CHECK_NOTHROW(WeightPair(3, 3));
    CHECK_NOTHROW(WeightPair(3, 0));
    CHECK_THROWS_AS(WeightPair(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(WeightPair(0, -1), std::invalid_argument);
}

TEST_CASE("fusion coefficients") {
    FusionCoefficients fc = fusion_coefficients(WeightPair(2, 1));
    CHECK(fc.m == std::vector<long>{4, 3, 2});
    CHECK(fc.c[1][0] == 1);
    CHECK(fc.c[1][1] == 3);
    CHECK(fc.p[0] == Rat(-8, 3));
    CHECK(fc.q[0] == Rat(-8, 3));

    // the lambda = mu = i guard
    FusionCoefficients fc11 = fusion_coefficients(WeightPair(1, 1));
    CHECK(fc11.p[1] == Rat(0));
    CHECK(fc11.q[1] == Rat(0));
    FusionCoefficients fc00 = fusion_coefficients(WeightPair(0, 0));
    CHECK(fc00.m == std::vector<long>{1, 0});
    CHECK(fc00.p[0] == Rat(0));
    CHECK(fc00.q[0] == Rat(0));

    // c_{ki} vanishes whenever m_i < k
    FusionCoefficients fc22 = fusion_coefficients(WeightPair(2, 2));
    for (size_t i = 0; i < fc22.c.size(); ++i)
        for (size_t j = 0; j < fc22.c[i].size(); ++j)
            if (static_cast<long>(j) > fc22.m[i]) CHECK(fc22.c[i][j] == 0);
}

TEST_CASE("the F family") {
    GAlgebra A = fusion_algebra();
    SUBCASE("F0 is the pure f0 power") {
        for (int l = 0; l <= 4; ++l)
            for (int m = 0; m <= l; ++m)
                CHECK(f_polynomial(A, WeightPair(l, m), 0) ==
                      A.power(A.generator(f0), l + m + 1));
    }
    SUBCASE("explicit small cases") {
        CHECK(f_polynomial(A, WeightPair(1, 1), 1) == pp(A, "2*f1*f0 - a*f0^2"));
        CHECK(f_polynomial(A, WeightPair(1, 1), 2).is_zero());  // F_{mu+1} = 0 when lambda = mu
        CHECK(f_polynomial(A, WeightPair(2, 1), 1) == pp(A, "3*f1*f0^2 - a*f0^3"));
        CHECK(f_polynomial(A, WeightPair(2, 1), 2) == pp(A, "f1^2"));
        CHECK_THROWS_AS(f_polynomial(A, WeightPair(1, 1), 3), std::invalid_argument);
    }
    SUBCASE("homogeneous with the expected leading monomial") {
        for (int l = 0; l <= 5; ++l)
            for (int m = 0; m <= l; ++m) {
                WeightPair w(l, m);
                FusionCoefficients fc = fusion_coefficients(w);
                for (int i = 0; i <= m; ++i) {
                    NcPoly F = f_polynomial(A, w, i);
                    REQUIRE_FALSE(F.is_zero());
                    ExpVec lead(6, 0);
                    lead[f1] = i;
                    lead[f0] = static_cast<int>(fc.m[i]) - i;
                    CHECK(F.lexp() == lead);
                    for (const NcTerm& t : F.terms()) CHECK(total_degree(t.mono) == fc.m[i]);
                }
            }
    }
    SUBCASE("specializing a to 0 leaves the leading monomial") {
        WeightPair w(4, 3);
        FusionCoefficients fc = fusion_coefficients(w);
        for (int i = 0; i <= 3; ++i) {
            NcPoly F0i = specialize_poly(f_polynomial(A, w, i), Rat(0));
            CHECK(F0i.size() == 1);
            ExpVec lead(6, 0);
            lead[f1] = i;
            lead[f0] = static_cast<int>(fc.m[i]) - i;
            CHECK(F0i.lexp() == lead);
        }
    }
    SUBCASE("F_{mu+1} is a monomial multiple of f1^{mu+1}") {
        WeightPair w(4, 2);
        NcPoly F3 = f_polynomial(A, w, 3);
        REQUIRE(F3.size() == 1);
        CHECK(F3.lexp()[f1] == 3);
    }
}

TEST_CASE("formal partial derivatives") {
    GAlgebra A = fusion_algebra();
    CHECK(formal_partial(A, pp(A, "f0^3"), f0) == pp(A, "3*f0^2"));
    CHECK(formal_partial(A, pp(A, "2*f1*f0 - a*f0^2"), f1) == pp(A, "2*f0"));
    CHECK(formal_partial(A, pp(A, "f0^5"), f1).is_zero());
    CHECK_THROWS_AS(formal_partial(A, pp(A, "e0*f0"), f0), std::invalid_argument);
}

TEST_CASE("ideal generators") {
    GAlgebra A = fusion_algebra();
    CHECK(strs(A, ideal_Ia(A, WeightPair(1, 1))) ==
          std::vector<std::string>{"e0", "e1", "h0 - 2", "h1 - a", "f0^3", "f1^2",
                                   "f1^2 - 2*a*f1*f0 + a^2*f0^2"});
    CHECK(strs(A, ideal_Ia(A, WeightPair(0, 0))) ==
          std::vector<std::string>{"e0", "e1", "h0", "h1", "f0", "f1", "f1 - a*f0"});
    CHECK(strs(A, ideal_Ia(A, WeightPair(2, 0))) ==
          std::vector<std::string>{"e0", "e1", "h0 - 2", "h1", "f0^3", "f1",
                                   "f1^3 - 3*a*f1^2*f0 + 3*a^2*f1*f0^2 - a^3*f0^3"});
    GAlgebra A0 = fusion_algebra_at(Rat(0));
    CHECK(strs(A0, ideal_I(A0, WeightPair(1, 1))) ==
          std::vector<std::string>{"e0", "e1", "h0 - 2", "h1", "f0^3", "f1^2"});
    CHECK(strs(A0, ideal_I(A0, WeightPair(2, 1))) ==
          std::vector<std::string>{"e0", "e1", "h0 - 3", "h1", "f0^4", "f1^2"});
    CHECK(strs(A0, ideal_I(A0, WeightPair(0, 0))) ==
          std::vector<std::string>{"e0", "e1", "h0", "h1", "f0", "f1"});
}

TEST_CASE("claimed basis") {
    GAlgebra A = fusion_algebra();
    CHECK(strs(A, claimed_groebner_basis(A, WeightPair(1, 1))) ==
          std::vector<std::string>{"e0", "e1", "h0 - 2", "h1 - a", "f0^3", "2*f1*f0 - a*f0^2",
                                   "f1^2"});
    CHECK(strs(A, claimed_groebner_basis(A, WeightPair(2, 1))) ==
          std::vector<std::string>{"e0", "e1", "h0 - 3", "h1 - a", "f0^4", "3*f1*f0^2 - a*f0^3",
                                   "f1^2"});
    CHECK(strs(A, claimed_groebner_basis(A, WeightPair(0, 0))) ==
          std::vector<std::string>{"e0", "e1", "h0", "h1", "f0", "f1"});
}

TEST_CASE("membership of the F family in the ideal") {
    GAlgebra A = fusion_algebra();
    for (int l = 0; l <= 4; ++l)
        for (int m = 0; m <= l; ++m) {
            WeightPair w(l, m);
            LeftGB G = left_buchberger(A, ideal_Ia(A, w));
            for (int i = 0; i <= m; ++i) CHECK(is_member(A, f_polynomial(A, w, i), G));
            CHECK(is_member(A, A.power(A.generator(f1), m + 1), G));
        }
}

TEST_CASE("commutator identities") {
    GAlgebra A = fusion_algebra();
    SUBCASE("the (2,1) h1-F0 example") {
        WeightPair w(2, 1);
        FusionCoefficients fc = fusion_coefficients(w);
        NcPoly lhs = A.commutator(pp(A, "h1"), f_polynomial(A, w, 0));
        CHECK(lhs == pp(A, "-8*f1*f0^3"));
        NcPoly rhs = A.add(
            A.scale(A.multiply(A.generator(f0), f_polynomial(A, w, 1)), ParamRat(fc.p[0])),
            A.scale(f_polynomial(A, w, 0), ParamRat(fc.q[0]) * ParamRat::param()));
        CHECK(lhs == rhs);
    }
    SUBCASE("the (1,1) h0-F1 example") {
        WeightPair w(1, 1);
        NcPoly F1 = f_polynomial(A, w, 1);
        CHECK(A.commutator(pp(A, "h0"), F1) == A.scale(F1, ParamRat(-4)));
    }
    SUBCASE("[e0, e1] = 0") { CHECK(A.commutator(pp(A, "e0"), pp(A, "e1")).is_zero()); }
    SUBCASE("full suite on small pairs") {
        for (int l = 0; l <= 3; ++l)
            for (int m = 0; m <= l; ++m) {
                IdentityReport rep = verify_commutators(A, WeightPair(l, m));
                INFO("pair (", l, ",", m, ")");
                CHECK(rep.all_ok());
            }
    }
}

TEST_CASE("degenerate h1 bracket when lambda = mu = i") {
    // [h1, F_mu] = -2(mu+1) f1^(mu+1) when lambda = mu; the generic closed
    // form with p_mu = q_mu = 0 would give zero instead
    GAlgebra A = fusion_algebra();
    for (int m = 0; m <= 3; ++m) {
        WeightPair w(m, m);
        NcPoly lhs = A.commutator(A.generator(h1), f_polynomial(A, w, m));
        NcPoly expected = A.scale(A.power(A.generator(f1), m + 1), ParamRat(-2 * (m + 1)));
        CHECK(lhs == expected);
    }
}

TEST_CASE("theorem verification") {
    std::vector<Rat> samples = {Rat(1), Rat(-2), Rat(5, 3), Rat(0)};
    SUBCASE("(1,1)") {
        TheoremReport rep = verify_theorem(WeightPair(1, 1), samples);
        CHECK(rep.ok());
        CHECK(rep.dimension == 4);
        CHECK(rep.graded == std::map<long, long>{{0, 3}, {1, 1}});
        CHECK(rep.samples.size() == 3);  // the zero sample feeds the degeneration check instead
    }
    SUBCASE("(3,2)") {
        TheoremReport rep = verify_theorem(WeightPair(3, 2), samples);
        CHECK(rep.ok());
        CHECK(rep.dimension == 12);
        CHECK(rep.graded == std::map<long, long>{{0, 6}, {1, 4}, {2, 2}});
    }
    SUBCASE("(0,0)") {
        TheoremReport rep = verify_theorem(WeightPair(0, 0), samples);
        CHECK(rep.ok());
        CHECK(rep.dimension == 1);
        CHECK(rep.graded == std::map<long, long>{{0, 1}});
    }
}

TEST_CASE("commutative Groebner property of the F family") {
    // over Q(a)[f0, f1] the nonzero F_i already form a Groebner basis:
    // Buchberger adds no leading exponents
    GAlgebra R = fusion_f_algebra();
    for (int l = 0; l <= 5; ++l)
        for (int m = 0; m <= l; ++m) {
            WeightPair w(l, m);
            std::vector<NcPoly> gens;
            for (int i = 0; i <= m + 1; ++i) {
                NcPoly Fi = f_polynomial(R, w, i, 0, 1);
                if (!Fi.is_zero()) gens.push_back(Fi);
            }
            LeftGB G = left_buchberger(R, gens);
            std::vector<ExpVec> in_exps, out_exps;
            for (const NcPoly& g : gens) in_exps.push_back(g.lexp());
            for (const NcPoly& g : G.elements) out_exps.push_back(g.lexp());
            std::sort(in_exps.begin(), in_exps.end());
            std::sort(out_exps.begin(), out_exps.end());
            INFO("pair (", l, ",", m, ")");
            CHECK(in_exps == out_exps);
        }
}

TEST_CASE("ad_e1 reduction") {
    SUBCASE("(1,1) k=1: scalar -6 on f1*f0") {
        AdIdentityReport rep = ad_e1_identity(WeightPair(1, 1), 1);
        CHECK(rep.ok);
        CHECK(rep.scalar == Rat(-6));
        CHECK(rep.sign == -1);
        CHECK(rep.expected_magnitude == 6);
    }
    SUBCASE("k=0 is the identity") {
        AdIdentityReport rep = ad_e1_identity(WeightPair(3, 2), 0);
        CHECK(rep.ok);
        CHECK(rep.scalar == Rat(1));
        CHECK(rep.expected_magnitude == 1);
    }
    SUBCASE("(2,2) k=2: magnitude 120") {
        AdIdentityReport rep = ad_e1_identity(WeightPair(2, 2), 2);
        CHECK(rep.ok);
        CHECK(rep.expected_magnitude == 120);
        CHECK(rep.scalar.abs() == Rat(120));
    }
    SUBCASE("k out of range") {
        CHECK_THROWS_AS(ad_e1_identity(WeightPair(2, 1), 2), std::invalid_argument);
    }
}
