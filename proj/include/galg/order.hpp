#pragma once

#include <compare>
#include <vector>

namespace galg {

/// Exponent vector in N_0^n; the width is the generator count of the owning algebra.
using ExpVec = std::vector<int>;

long total_degree(const ExpVec& a);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
/// Componentwise difference; pre: b divides a.
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
/// Componentwise divisibility a | b (a_i <= b_i for all i).
bool exp_divides(const ExpVec& a, const ExpVec& b);
/// Componentwise maximum (the lcm of the monomials).
ExpVec exp_lcm(const ExpVec& a, const ExpVec& b);
bool exp_disjoint(const ExpVec& a, const ExpVec& b);
bool exp_is_zero(const ExpVec& a);

/// Degree-compatible admissible order: weighted total degree first, ties broken
/// lexicographically on the exponents read in priority sequence (the generator
/// listed first in `priority` is the most significant).
struct MonomialOrder {
    std::vector<long> weights;
    std::vector<int> priority;

    MonomialOrder() = default;
    MonomialOrder(std::vector<long> w, std::vector<int> prio);

    /// All weights 1, priority x_{n-1} > ... > x_0.
    static MonomialOrder deglex(int n);
    static MonomialOrder deglex(int n, std::vector<int> priority);

    int width() const { return static_cast<int>(weights.size()); }
    long weighted_degree(const ExpVec& a) const;

    std::strong_ordering compare(const ExpVec& a, const ExpVec& b) const;
    bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }
    bool greater(const ExpVec& a, const ExpVec& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder&) const = default;
};

}  // namespace galg
