#pragma once

#include "galg/order.hpp"
#include "galg/param.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace galg {

struct NcTerm {
    ExpVec mono;
    ParamRat coef;
    bool operator==(const NcTerm&) const = default;
};

/// Element of a PBW algebra: sparse terms kept strictly descending in the
/// owning algebra's monomial order, no zero coefficients.
class NcPoly {
public:
    NcPoly() = default;
    static NcPoly make(const MonomialOrder& ord, std::vector<NcTerm> terms);

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::vector<NcTerm>& terms() const { return terms_; }

    const ExpVec& lexp() const;   // throws std::domain_error on the zero polynomial
    const ParamRat& lc() const;

    bool operator==(const NcPoly&) const = default;

private:
    std::vector<NcTerm> terms_;
    friend class GAlgebra;
    friend NcPoly specialize_poly(const NcPoly& f, const Rat& a0);
};

struct PbwReport {
    bool ok = true;
    std::optional<std::array<int, 3>> failing_triple;  // generator indices i < j < k
    std::string detail;
};

struct ProductCache;

/// PBW algebra over Q(a) presented by relations  x_j x_i = q_ij x_i x_j + d_ij
/// for i < j, with a degree-compatible admissible monomial order.  Standard
/// monomials are the descending words x_{n-1}^{a_{n-1}} ... x_1^{a_1} x_0^{a_0}
/// (so d_ij = [x_j, x_i] in Lie type).  Immutable after construction; all
/// operations are pure.
class GAlgebra {
public:
    /// Commutative polynomial ring (all q = 1, d = 0).
    GAlgebra(std::vector<std::string> names, MonomialOrder order);
    /// General presentation; q and d are indexed by pair_index(i, j) for i < j.
    /// Throws if a q is zero or some d violates lexp(d_ij) <= lexp(x_i x_j).
    GAlgebra(std::vector<std::string> names, MonomialOrder order, std::vector<ParamRat> q,
             std::vector<NcPoly> d);

    GAlgebra(GAlgebra&&) noexcept;
    GAlgebra& operator=(GAlgebra&&) noexcept;
    GAlgebra(const GAlgebra&) = delete;
    GAlgebra& operator=(const GAlgebra&) = delete;
    ~GAlgebra();

    static int pair_index(int i, int j);  // pre: i < j

    int ngens() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    int gen_index(const std::string& name) const;  // -1 when absent
    const MonomialOrder& order() const { return order_; }
    bool lie_type() const { return lie_type_; }
    const ParamRat& q(int i, int j) const { return q_[pair_index(i, j)]; }
    const NcPoly& d(int i, int j) const { return d_[pair_index(i, j)]; }

    NcPoly zero() const { return {}; }
    NcPoly one() const { return constant(ParamRat(1)); }
    NcPoly constant(const ParamRat& c) const;
    NcPoly generator(int i) const;
    NcPoly monomial(ExpVec e, ParamRat c = ParamRat(1)) const;
    NcPoly from_terms(std::vector<NcTerm> terms) const;

    NcPoly add(const NcPoly& f, const NcPoly& g) const;
    NcPoly sub(const NcPoly& f, const NcPoly& g) const;
    NcPoly negate(const NcPoly& f) const;
    NcPoly scale(const NcPoly& f, const ParamRat& c) const;
    /// Divide by the leading coefficient; zero stays zero.
    NcPoly monic(const NcPoly& f) const;

    /// PBW normal form of x^alpha * x^beta.
    NcPoly normal_form_product(const ExpVec& alpha, const ExpVec& beta) const;
    NcPoly multiply(const NcPoly& f, const NcPoly& g) const;
    NcPoly commutator(const NcPoly& f, const NcPoly& g) const;
    NcPoly power(const NcPoly& f, int k) const;

    /// Resolves every overlap word x_k x_j x_i (i < j < k) both ways and
    /// compares; Mon(A) is a basis iff all triples agree.
    PbwReport pbw_consistency_check() const;

    /// Same presentation with the parameter evaluated at a0.
    GAlgebra specialized(const Rat& a0) const;

    bool same_presentation(const GAlgebra& o) const;

private:
    int n_ = 0;
    std::vector<std::string> names_;
    MonomialOrder order_;
    std::vector<ParamRat> q_;
    std::vector<NcPoly> d_;
    bool lie_type_ = true;
    std::unique_ptr<ProductCache> cache_;

    void validate() const;
    const NcPoly& gen_times_mono(int k, const ExpVec& gamma) const;
};

/// Coefficient-wise evaluation at a0 (monomials untouched); throws on a pole.
NcPoly specialize_poly(const NcPoly& f, const Rat& a0);

}  // namespace galg
