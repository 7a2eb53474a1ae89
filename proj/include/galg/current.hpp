#pragma once

#include "galg/galgebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galg {

/// Finite-dimensional Lie algebra given by structure constants over Q(a):
/// [x_i, x_k] = sum_r c(i,k,r) x_r.
struct LieStructure {
    int dim = 0;
    std::vector<std::string> names;
    std::vector<ParamRat> c;  // flattened (i*dim + k)*dim + r

    LieStructure(int dim, std::vector<std::string> names);
    const ParamRat& bracket_coeff(int i, int k, int r) const;
    /// Sets [x_i, x_k] (and the antisymmetric entry) from sparse coefficients.
    void set_bracket(int i, int k, const std::vector<std::pair<int, ParamRat>>& coeffs);
};

struct LieReport {
    bool ok = true;
    std::string detail;
};

/// Checks antisymmetry and the Jacobi identity exactly over Q(a).
LieReport validate_lie(const LieStructure& L);

/// Basis (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieStructure sl2_structure();

/// Monic truncation polynomial  t^m - sum_{i<m} p_i t^i.
struct TruncationPoly {
    int m = 1;
    std::vector<ParamRat> p;  // size m

    TruncationPoly(int m, std::vector<ParamRat> p);
    /// t^m (all lower coefficients zero).
    static TruncationPoly power(int m);
    /// t^2 - a*t, the two-point evaluation family.
    static TruncationPoly two_point_generic();
    static TruncationPoly two_point(const Rat& a0);
};

/// The enveloping algebra U(g (x) C[t]/(p)) as a G-algebra of Lie type.
/// Generators are x_{i,j} = x_i (x) t^j ordered by Lie index then t-degree and
/// named by appending the t-degree to the basis name ("e0", "e1", ...).
/// The default monomial order is total degree with priority x_{n-1} > ... > x_0.
GAlgebra truncated_current(const LieStructure& L, const TruncationPoly& p);
GAlgebra truncated_current(const LieStructure& L, const TruncationPoly& p,
                           const MonomialOrder& order);

}  // namespace galg
