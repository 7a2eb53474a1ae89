#include "galg/current.hpp"

#include <sstream>
#include <stdexcept>

namespace galg {

LieStructure::LieStructure(int d, std::vector<std::string> n)
    : dim(d), names(std::move(n)), c(static_cast<size_t>(d) * d * d, ParamRat(0)) {
    if (dim < 0 || static_cast<int>(names.size()) != dim)
        throw std::invalid_argument("LieStructure: name count mismatch");
}

const ParamRat& LieStructure::bracket_coeff(int i, int k, int r) const {
    return c[(static_cast<size_t>(i) * dim + k) * dim + r];
}

void LieStructure::set_bracket(int i, int k, const std::vector<std::pair<int, ParamRat>>& coeffs) {
    for (auto& [r, v] : coeffs) {
        c[(static_cast<size_t>(i) * dim + k) * dim + r] = v;
        c[(static_cast<size_t>(k) * dim + i) * dim + r] = -v;
    }
}

LieReport validate_lie(const LieStructure& L) {
    int n = L.dim;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < n; ++r)
                if (!(L.bracket_coeff(i, k, r) + L.bracket_coeff(k, i, r)).is_zero()) {
                    std::ostringstream os;
                    os << "antisymmetry fails for [" << L.names[i] << "," << L.names[k] << "]";
                    return {false, os.str()};
                }
    // Jacobi: sum over cyclic permutations of [[x_i,x_k],x_u] has zero coefficients
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int u = k + 1; u < n; ++u)
                for (int s = 0; s < n; ++s) {
                    ParamRat sum(0);
                    for (int r = 0; r < n; ++r) {
                        sum += L.bracket_coeff(i, k, r) * L.bracket_coeff(r, u, s);
                        sum += L.bracket_coeff(k, u, r) * L.bracket_coeff(r, i, s);
                        sum += L.bracket_coeff(u, i, r) * L.bracket_coeff(r, k, s);
                    }
                    if (!sum.is_zero()) {
                        std::ostringstream os;
                        os << "Jacobi fails on (" << L.names[i] << "," << L.names[k] << ","
                           << L.names[u] << ")";
                        return {false, os.str()};
                    }
                }
    return {true, ""};
}

LieStructure sl2_structure() {
    LieStructure L(3, {"e", "h", "f"});
    // indices: e = 0, h = 1, f = 2
    L.set_bracket(1, 0, {{0, ParamRat(2)}});   // [h, e] = 2e
    L.set_bracket(1, 2, {{2, ParamRat(-2)}});  // [h, f] = -2f
    L.set_bracket(0, 2, {{1, ParamRat(1)}});   // [e, f] = h
    return L;
}

TruncationPoly::TruncationPoly(int m_, std::vector<ParamRat> p_) : m(m_), p(std::move(p_)) {
    if (m < 1) throw std::invalid_argument("TruncationPoly: degree must be >= 1");
    if (static_cast<int>(p.size()) != m)
        throw std::invalid_argument("TruncationPoly: coefficient count mismatch");
}

TruncationPoly TruncationPoly::power(int m) {
    return TruncationPoly(m, std::vector<ParamRat>(m, ParamRat(0)));
}

TruncationPoly TruncationPoly::two_point_generic() {
    return TruncationPoly(2, {ParamRat(0), ParamRat::param()});
}

TruncationPoly TruncationPoly::two_point(const Rat& a0) {
    return TruncationPoly(2, {ParamRat(0), ParamRat(a0)});
}

GAlgebra truncated_current(const LieStructure& L, const TruncationPoly& p) {
    return truncated_current(L, p, MonomialOrder::deglex(L.dim * p.m));
}

GAlgebra truncated_current(const LieStructure& L, const TruncationPoly& p,
                           const MonomialOrder& order) {
    LieReport rep = validate_lie(L);
    if (!rep.ok) throw std::invalid_argument("truncated_current: " + rep.detail);
    int m = p.m;
    int n = L.dim * m;
    if (order.width() != n) throw std::invalid_argument("truncated_current: order width mismatch");

    std::vector<std::string> names(n);
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < m; ++j) names[i * m + j] = L.names[i] + std::to_string(j);

    // red[k][s]: coefficient of t^s in t^k mod p, for 0 <= k <= 2(m-1)
    std::vector<std::vector<ParamRat>> red(2 * m - 1, std::vector<ParamRat>(m, ParamRat(0)));
    for (int k = 0; k < m; ++k) red[k][k] = ParamRat(1);
    for (int k = m; k <= 2 * (m - 1); ++k) {
        // t^k = t * t^(k-1), then replace t^m by sum p_i t^i
        std::vector<ParamRat> shifted(m + 1, ParamRat(0));
        for (int s = 0; s < m; ++s) shifted[s + 1] = red[k - 1][s];
        for (int s = 0; s < m; ++s) red[k][s] = shifted[s] + shifted[m] * p.p[s];
    }

    size_t npairs = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<ParamRat> q(npairs, ParamRat(1));
    std::vector<NcPoly> d(npairs);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int i = u / m, j = u % m;
            int k = v / m, l = v % m;
            // d_uv = [x_v, x_u] = [x_k, x_i] (x) t^(j+l) reduced mod p
            std::vector<NcTerm> terms;
            for (int r = 0; r < L.dim; ++r) {
                const ParamRat& cr = L.bracket_coeff(k, i, r);
                if (cr.is_zero()) continue;
                for (int s = 0; s < m; ++s) {
                    ParamRat coef = cr * red[j + l][s];
                    if (coef.is_zero()) continue;
                    ExpVec e(n, 0);
                    e[r * m + s] = 1;
                    terms.push_back({std::move(e), std::move(coef)});
                }
            }
            d[GAlgebra::pair_index(u, v)] = NcPoly::make(order, std::move(terms));
        }

    GAlgebra A(std::move(names), order, std::move(q), std::move(d));
    PbwReport pbw = A.pbw_consistency_check();
    if (!pbw.ok) throw std::invalid_argument("truncated_current: " + pbw.detail);
    return A;
}

}  // namespace galg
