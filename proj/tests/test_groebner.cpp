#include "galg/groebner.hpp"

#include "galg/fusion.hpp"
#include "galg/parse.hpp"

#include <doctest.h>

#include <random>

using namespace galg;

namespace {

// first Weyl algebra <x, D | D x = x D + 1>
GAlgebra weyl() {
    MonomialOrder ord = MonomialOrder::deglex(2);
    GAlgebra tmp({"x", "D"}, ord);
    return GAlgebra({"x", "D"}, ord, {ParamRat(1)}, {parse_poly(tmp, "1")});
}

NcPoly pp(const GAlgebra& A, const std::string& s) { return parse_poly(A, s); }

std::vector<std::string> basis_strings(const GAlgebra& A, const LeftGB& G) {
    std::vector<std::string> out;
    for (const NcPoly& g : G.elements) out.push_back(poly_str(A, g));
    return out;
}

}  // namespace

TEST_CASE("left normal form in the Weyl algebra") {
    GAlgebra A = weyl();
    // x*D + 1 = D * x, so it reduces to zero against {x}
    NcPoly f = pp(A, "x*D + 1");
    CHECK(left_normal_form(A, f, std::vector<NcPoly>{pp(A, "x")}).is_zero());
    CHECK(left_normal_form(A, f, std::vector<NcPoly>{}) == f);
}

TEST_CASE("left normal form is deterministic and fully reduces") {
    GAlgebra A = fusion_algebra();
    // (f1 - a f0)^2 lies in the span of {f1^2, f1 f0 - (a/2) f0^2}
    std::vector<NcPoly> G = {pp(A, "f1^2"), pp(A, "f1*f0 - a/2*f0^2")};
    CHECK(left_normal_form(A, pp(A, "(f1 - a*f0)^2"), G).is_zero());
    // remainders contain no term divisible by a leading exponent of G
    NcPoly r = left_normal_form(A, pp(A, "f1^2*f0 + f0^2 + e0"), G);
    for (const NcTerm& t : r.terms())
        for (const NcPoly& g : G) CHECK_FALSE(exp_divides(g.lexp(), t.mono));
}

TEST_CASE("spoly") {
    GAlgebra A = fusion_algebra();
    NcPoly f = pp(A, "2*f1*f0 - a*f0^2");
    CHECK(spoly(A, f, f).is_zero());
    CHECK_THROWS_AS(spoly(A, f, A.zero()), std::invalid_argument);
    // leading terms cancel
    NcPoly g = pp(A, "f0^3");
    NcPoly s = spoly(A, f, g);
    CHECK_FALSE(s.is_zero());
    CHECK(A.order().less(s.lexp(), exp_lcm(f.lexp(), g.lexp())));

    // in the commutative ring Q(a)[f0,f1], spoly(F1, F0) reduces to 0 mod {F0, F1}
    GAlgebra R = fusion_f_algebra();
    WeightPair w(1, 1);
    NcPoly F0 = f_polynomial(R, w, 0, 0, 1), F1 = f_polynomial(R, w, 1, 0, 1);
    CHECK(left_normal_form(R, spoly(R, F1, F0), std::vector<NcPoly>{F0, F1}).is_zero());
}

TEST_CASE("product criterion agrees with the commutator route") {
    // spoly(e0, f0^3) and [f0^3, e0] have the same normal form against the pair
    GAlgebra A = fusion_algebra();
    NcPoly f = pp(A, "e0"), g = pp(A, "f0^3");
    std::vector<NcPoly> FG = {f, g};
    CHECK(left_normal_form(A, spoly(A, f, g), FG) ==
          left_normal_form(A, A.commutator(g, f), FG));

    SUBCASE("randomized monic pairs with variable-disjoint leading monomials") {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> nterms(1, 3), e(0, 2), c(-3, 3);
        auto random_poly = [&]() {
            std::vector<NcTerm> terms;
            int k = nterms(rng);
            for (int t = 0; t < k; ++t) {
                ExpVec mono(6);
                int budget = 3;
                for (auto& x : mono) {
                    x = std::min(e(rng), budget);
                    budget -= x;
                }
                int coef = c(rng);
                if (coef == 0) coef = 1;
                terms.push_back({std::move(mono), ParamRat(coef)});
            }
            return A.monic(A.from_terms(std::move(terms)));
        };
        int checked = 0;
        while (checked < 50) {
            NcPoly u = random_poly(), v = random_poly();
            if (u.is_zero() || v.is_zero() || !exp_disjoint(u.lexp(), v.lexp())) continue;
            std::vector<NcPoly> UV = {u, v};
            CHECK(left_normal_form(A, spoly(A, u, v), UV) ==
                  left_normal_form(A, A.commutator(v, u), UV));
            ++checked;
        }
    }
}

TEST_CASE("buchberger on the Weyl example reproduces the leading-term basis {x}") {
    GAlgebra A = weyl();
    LeftGB G = left_buchberger(A, {pp(A, "x"), pp(A, "x*D + 1")});
    MonomialIdeal M = leading_term_ideal(A, G);
    REQUIRE(M.gens.size() == 1);
    CHECK(M.gens[0] == ExpVec{1, 0});
    CHECK_FALSE(staircase(M).finite);

    // the commutative leading-term construction is essential: the left ideal
    // generated by the leading terms x, xD inside the Weyl algebra itself
    // already contains 1 = D*x - x*D
    LeftGB unit = left_buchberger(A, {pp(A, "x"), pp(A, "x*D")});
    CHECK(basis_strings(A, unit) == std::vector<std::string>{"1"});
    CHECK(is_member(A, A.one(), unit));
}

TEST_CASE("buchberger on the fusion ideal at (1,1)") {
    GAlgebra A = fusion_algebra();
    WeightPair w(1, 1);
    LeftGB G = left_buchberger(A, ideal_Ia(A, w));
    CHECK(basis_strings(A, G) ==
          std::vector<std::string>{"e0", "e1", "h0 - 2", "h1 - a", "f1*f0 - a/2*f0^2", "f1^2",
                                   "f0^3"});
    SUBCASE("single monomial generator") {
        LeftGB single = left_buchberger(A, {pp(A, "f0")});
        CHECK(basis_strings(A, single) == std::vector<std::string>{"f0"});
    }
    SUBCASE("all-zero input is rejected") {
        CHECK_THROWS_AS(left_buchberger(A, {A.zero(), A.zero()}), std::invalid_argument);
    }
    SUBCASE("every s-polynomial of the output reduces to zero") {
        for (size_t i = 0; i < G.elements.size(); ++i)
            for (size_t j = i + 1; j < G.elements.size(); ++j)
                CHECK(left_normal_form(A, spoly(A, G.elements[i], G.elements[j]), G).is_zero());
    }
    SUBCASE("with and without the product criterion") {
        LeftGB G2 = left_buchberger(A, ideal_Ia(A, w), {.use_product_criterion = false});
        CHECK(G.elements == G2.elements);
    }
}

TEST_CASE("interreduce") {
    GAlgebra A = fusion_algebra();
    CHECK(basis_strings(A, interreduce(A, {pp(A, "f0"), pp(A, "f0^2")})) ==
          std::vector<std::string>{"f0"});
    CHECK(basis_strings(A, interreduce(A, {pp(A, "f0^3"), pp(A, "2*f1*f0 - a*f0^2")})) ==
          std::vector<std::string>{"f1*f0 - a/2*f0^2", "f0^3"});
    // claimed basis for (2,1), already reduced up to scaling
    WeightPair w(2, 1);
    LeftGB claimed = interreduce(A, claimed_groebner_basis(A, w));
    CHECK(basis_strings(A, claimed) ==
          std::vector<std::string>{"e0", "e1", "h0 - 3", "h1 - a", "f1^2",
                                   "f1*f0^2 - a/3*f0^3", "f0^4"});
    SUBCASE("idempotent and input-order independent") {
        std::vector<NcPoly> gens = claimed_groebner_basis(A, w);
        LeftGB once = interreduce(A, gens);
        CHECK(interreduce(A, once.elements).elements == once.elements);
        std::mt19937 rng(13);
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(interreduce(A, gens).elements == once.elements);
    }
}

TEST_CASE("leading term ideal prunes divisible generators") {
    GAlgebra A = fusion_algebra();
    MonomialIdeal M = leading_term_ideal(A.order(), {pp(A, "f0"), pp(A, "f0*f1")});
    REQUIRE(M.gens.size() == 1);
    CHECK(poly_str(A, A.monomial(M.gens[0])) == "f0");
}

TEST_CASE("staircase") {
    GAlgebra A = fusion_algebra();
    WeightPair w(1, 1);
    LeftGB G = left_buchberger(A, ideal_Ia(A, w));
    MonomialIdeal M = leading_term_ideal(A, G);
    Staircase st = staircase(M);
    REQUIRE(st.finite);
    CHECK(st.count == 4);
    std::vector<std::string> mons;
    for (const ExpVec& e : st.monomials) mons.push_back(poly_str(A, A.monomial(e)));
    std::sort(mons.begin(), mons.end());
    CHECK(mons == std::vector<std::string>{"1", "f0", "f0^2", "f1"});

    // empty ideal: infinite staircase
    CHECK_FALSE(staircase(MonomialIdeal{6, {}}).finite);

    // graded by t-degree
    std::map<long, long> g = graded_dimensions(M, {0, 1, 0, 1, 0, 1});
    CHECK(g == std::map<long, long>{{0, 3}, {1, 1}});
    CHECK(graded_dimensions(M, {0, 0, 0, 0, 0, 0}) == std::map<long, long>{{0, 4}});
    CHECK_THROWS_AS(graded_dimensions(MonomialIdeal{6, {}}, std::vector<long>(6, 0)),
                    std::domain_error);
}

TEST_CASE("membership") {
    GAlgebra A = fusion_algebra();
    WeightPair w(1, 1);
    LeftGB G = left_buchberger(A, ideal_Ia(A, w));
    CHECK(is_member(A, f_polynomial(A, w, 1), G));
    CHECK_FALSE(is_member(A, A.one(), G));
    CHECK(is_member(A, A.zero(), G));
}

TEST_CASE("ideal equality") {
    WeightPair w(1, 1);
    GAlgebra A0 = fusion_algebra_at(Rat(0));
    GAlgebra Ag = fusion_algebra();
    std::vector<NcPoly> i0;
    for (const NcPoly& g : ideal_Ia(Ag, w)) i0.push_back(specialize_poly(g, Rat(0)));
    CHECK(ideals_equal(A0, i0, ideal_I(A0, w)));

    // specializations at different points give different ideals (h1 constants differ)
    GAlgebra A1 = fusion_algebra_at(Rat(1));
    std::vector<NcPoly> g1, g2;
    for (const NcPoly& g : ideal_Ia(Ag, w)) g1.push_back(specialize_poly(g, Rat(1)));
    for (const NcPoly& g : ideal_Ia(Ag, w)) g2.push_back(specialize_poly(g, Rat(2)));
    CHECK_FALSE(ideals_equal(A1, g1, g2));

    // permutation invariance
    std::vector<NcPoly> perm = g1;
    std::rotate(perm.begin(), perm.begin() + 2, perm.end());
    CHECK(ideals_equal(A1, g1, perm));
}
