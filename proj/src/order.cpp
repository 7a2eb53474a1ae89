#include "galg/order.hpp"

#include <numeric>
#include <stdexcept>

namespace galg {

long total_degree(const ExpVec& a) {
    long d = 0;
    for (int e : a) d += e;
    return d;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] -= b[i];
        if (r[i] < 0) throw std::domain_error("exp_sub: not divisible");
    }
    return r;
}

bool exp_divides(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

bool exp_disjoint(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

bool exp_is_zero(const ExpVec& a) {
    for (int e : a)
        if (e != 0) return false;
    return true;
}

MonomialOrder::MonomialOrder(std::vector<long> w, std::vector<int> prio)
    : weights(std::move(w)), priority(std::move(prio)) {
    if (weights.size() != priority.size())
        throw std::invalid_argument("MonomialOrder: weights/priority size mismatch");
    for (long x : weights)
        if (x <= 0) throw std::invalid_argument("MonomialOrder: weights must be positive");
    std::vector<bool> seen(priority.size(), false);
    for (int i : priority) {
        if (i < 0 || i >= static_cast<int>(priority.size()) || seen[i])
            throw std::invalid_argument("MonomialOrder: priority is not a permutation");
        seen[i] = true;
    }
}

MonomialOrder MonomialOrder::deglex(int n) {
    std::vector<int> prio(n);
    for (int i = 0; i < n; ++i) prio[i] = n - 1 - i;
    return deglex(n, std::move(prio));
}

MonomialOrder MonomialOrder::deglex(int n, std::vector<int> priority) {
    return MonomialOrder(std::vector<long>(n, 1), std::move(priority));
}

long MonomialOrder::weighted_degree(const ExpVec& a) const {
    long d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += weights[i] * a[i];
    return d;
}

std::strong_ordering MonomialOrder::compare(const ExpVec& a, const ExpVec& b) const {
    if (a.size() != weights.size() || b.size() != weights.size())
        throw std::invalid_argument("MonomialOrder: exponent width mismatch");
    long da = weighted_degree(a), db = weighted_degree(b);
    if (da != db) return da <=> db;
    for (int i : priority) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace galg
