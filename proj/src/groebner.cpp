#include "galg/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace galg {

namespace {

// Smallest eligible divisor position in G for the exponent e, or -1.
int find_reducer(const std::span<const NcPoly>& G, const ExpVec& e) {
    for (size_t i = 0; i < G.size(); ++i)
        if (exp_divides(G[i].lexp(), e)) return static_cast<int>(i);
    return -1;
}

}  // namespace

NcPoly left_normal_form(const GAlgebra& A, const NcPoly& f, std::span<const NcPoly> G) {
    for (const NcPoly& g : G)
        if (g.is_zero()) throw std::invalid_argument("left_normal_form: zero divisor in G");
    std::vector<NcTerm> remainder;
    NcPoly p = f;
    while (!p.is_zero()) {
        int j = find_reducer(G, p.lexp());
        if (j < 0) {
            // leading term is irreducible: it is final, everything below may still reduce
            remainder.push_back(p.terms().front());
            p = A.sub(p, A.monomial(p.lexp(), p.lc()));
            continue;
        }
        const NcPoly& g = G[j];
        NcPoly mult = A.multiply(A.monomial(exp_sub(p.lexp(), g.lexp())), g);
        p = A.sub(p, A.scale(mult, p.lc() / mult.lc()));
    }
    return A.from_terms(std::move(remainder));
}

NcPoly left_normal_form(const GAlgebra& A, const NcPoly& f, const std::vector<NcPoly>& G) {
    return left_normal_form(A, f, std::span<const NcPoly>(G));
}

NcPoly left_normal_form(const GAlgebra& A, const NcPoly& f, const LeftGB& G) {
    return left_normal_form(A, f, std::span<const NcPoly>(G.elements));
}

NcPoly spoly(const GAlgebra& A, const NcPoly& f, const NcPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("spoly: zero input");
    ExpVec lcm = exp_lcm(f.lexp(), g.lexp());
    NcPoly lf = A.multiply(A.monomial(exp_sub(lcm, f.lexp())), f);
    NcPoly lg = A.multiply(A.monomial(exp_sub(lcm, g.lexp())), g);
    return A.sub(A.monic(lf), A.monic(lg));
}

namespace {

struct Pair {
    ExpVec lcm;
    int i, j;  // i < j, indices into the working basis
};

struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const Pair& x, const Pair& y) const {
        auto c = ord->compare(x.lcm, y.lcm);
        if (c != 0) return c < 0;
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    }
};

}  // namespace

LeftGB left_buchberger(const GAlgebra& A, const std::vector<NcPoly>& gens, BuchbergerOpts opts) {
    std::vector<NcPoly> G;
    std::set<Pair, PairCmp> pairs{PairCmp{&A.order()}};

    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i)
            pairs.insert(Pair{exp_lcm(G[i].lexp(), G[j].lexp()), i, j});
    };

    bool any = false;
    for (const NcPoly& f : gens) {
        if (f.is_zero()) continue;
        any = true;
        NcPoly r = left_normal_form(A, f, G);
        if (r.is_zero()) continue;
        G.push_back(A.monic(r));
        push_pairs(static_cast<int>(G.size()) - 1);
    }
    if (!any) throw std::invalid_argument("left_buchberger: all generators are zero");

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const NcPoly& f = G[p.i];
        const NcPoly& g = G[p.j];
        NcPoly h;
        if (opts.use_product_criterion && A.lie_type() && exp_disjoint(f.lexp(), g.lexp())) {
            // Generalized Product Criterion: the s-polynomial of f, g reduces
            // to [g, f] with respect to {f, g}.
            h = left_normal_form(A, A.commutator(g, f), G);
        } else {
            h = left_normal_form(A, spoly(A, f, g), G);
        }
        if (h.is_zero()) continue;
        G.push_back(A.monic(h));
        push_pairs(static_cast<int>(G.size()) - 1);
    }
    return interreduce(A, std::move(G));
}

LeftGB interreduce(const GAlgebra& A, std::vector<NcPoly> G) {
    // drop zeros, make monic
    std::vector<NcPoly> work;
    for (NcPoly& g : G)
        if (!g.is_zero()) work.push_back(A.monic(g));

#ifndef NDEBUG
    // guard the precondition: the input must already be a Groebner basis
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = i + 1; j < work.size(); ++j)
            if (!left_normal_form(A, spoly(A, work[i], work[j]), work).is_zero())
                throw std::logic_error("interreduce: input is not a Groebner basis");
#endif

    std::sort(work.begin(), work.end(),
              [&](const NcPoly& x, const NcPoly& y) { return A.order().less(x.lexp(), y.lexp()); });

    // minimalize: drop any element whose leading exponent another one divides
    std::vector<NcPoly> minimal;
    for (const NcPoly& g : work) {
        bool redundant = false;
        for (const NcPoly& h : minimal)
            if (exp_divides(h.lexp(), g.lexp())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    // tail-reduce to a fixpoint; leading terms survive by minimality
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<NcPoly> others;
            others.reserve(minimal.size() - 1);
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            NcPoly r = A.monic(left_normal_form(A, minimal[i], others));
            if (!(r == minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(),
              [&](const NcPoly& x, const NcPoly& y) { return A.order().less(x.lexp(), y.lexp()); });
    return LeftGB{&A, std::move(minimal), true};
}

MonomialIdeal leading_term_ideal(const MonomialOrder& ord, const std::vector<NcPoly>& G) {
    std::vector<ExpVec> exps;
    for (const NcPoly& g : G)
        if (!g.is_zero()) exps.push_back(g.lexp());
    std::sort(exps.begin(), exps.end(), [&](const ExpVec& a, const ExpVec& b) { return ord.less(a, b); });
    std::vector<ExpVec> minimal;
    for (const ExpVec& e : exps) {
        bool redundant = false;
        for (const ExpVec& m : minimal)
            if (exp_divides(m, e)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(e);
    }
    return MonomialIdeal{ord.width(), std::move(minimal)};
}

MonomialIdeal leading_term_ideal(const GAlgebra& A, const LeftGB& G) {
    if (G.elements.empty()) throw std::invalid_argument("leading_term_ideal: empty basis");
    return leading_term_ideal(A.order(), G.elements);
}

Staircase staircase(const MonomialIdeal& M) {
    // finite iff each variable has a pure power among the generators
    std::vector<int> bound(M.width, -1);
    for (const ExpVec& g : M.gens) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < M.width; ++i)
            if (g[i] > 0) {
                if (var >= 0) {
                    pure = false;
                    break;
                }
                var = i;
            }
        if (pure && var >= 0 && (bound[var] < 0 || g[var] < bound[var])) bound[var] = g[var];
        if (pure && var < 0) return {true, 0, {}};  // 1 is a generator: empty staircase
    }
    for (int i = 0; i < M.width; ++i)
        if (bound[i] < 0) return {false, 0, {}};

    Staircase s;
    s.finite = true;
    ExpVec cur(M.width, 0);
    auto divisible = [&](const ExpVec& e) {
        for (const ExpVec& g : M.gens)
            if (exp_divides(g, e)) return true;
        return false;
    };
    // enumerate the box below the pure-power bounds
    while (true) {
        if (!divisible(cur)) s.monomials.push_back(cur);
        int i = 0;
        while (i < M.width) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == M.width) break;
    }
    s.count = static_cast<long>(s.monomials.size());
    return s;
}

std::map<long, long> graded_dimensions(const MonomialIdeal& M, const std::vector<long>& weights) {
    if (static_cast<int>(weights.size()) != M.width)
        throw std::invalid_argument("graded_dimensions: weight width mismatch");
    Staircase s = staircase(M);
    if (!s.finite) throw std::domain_error("graded_dimensions: infinite staircase");
    std::map<long, long> out;
    for (const ExpVec& e : s.monomials) {
        long d = 0;
        for (int i = 0; i < M.width; ++i) d += weights[i] * e[i];
        ++out[d];
    }
    return out;
}

bool is_member(const GAlgebra& A, const NcPoly& f, const LeftGB& G) {
    return left_normal_form(A, f, G).is_zero();
}

bool ideals_equal(const GAlgebra& A, const std::vector<NcPoly>& gens1,
                  const std::vector<NcPoly>& gens2) {
    LeftGB G1 = left_buchberger(A, gens1);
    LeftGB G2 = left_buchberger(A, gens2);
    for (const NcPoly& f : gens1)
        if (!is_member(A, f, G2)) return false;
    for (const NcPoly& f : gens2)
        if (!is_member(A, f, G1)) return false;
    return true;
}

}  // namespace galg
