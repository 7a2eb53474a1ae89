#include "galg/param.hpp"

#include <sstream>
#include <stdexcept>

namespace galg {

namespace {

const Rat kRatZero{};

// ---- integer polynomial helpers -------------------------------------------
// ZPoly invariant: empty means zero, otherwise the back entry is nonzero.

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool zp_is_zero(const ZPoly& p) { return p.empty(); }

int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (zp_is_zero(a) || zp_is_zero(b)) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

ZPoly zp_scale(const ZPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// Content with the sign of the leading coefficient; 0 for the zero polynomial.
mpz_class zp_content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0 && p.back() < 0) g = -g;
    return g;
}

ZPoly zp_divexact_scalar(const ZPoly& p, const mpz_class& c) {
    ZPoly r = p;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
ZPoly zp_prem(ZPoly a, const ZPoly& b) {
    int db = zp_deg(b);
    const mpz_class& lb = b.back();
    while (!zp_is_zero(a) && zp_deg(a) >= db) {
        int shift = zp_deg(a) - db;
        mpz_class la = a.back();
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        zp_trim(a);
    }
    return a;
}

ZPoly zp_primitive(ZPoly p) {
    if (zp_is_zero(p)) return p;
    mpz_class c = zp_content(p);
    if (c != 1) p = zp_divexact_scalar(p, c);
    return p;
}

// Primitive PRS gcd; result primitive with positive leading coefficient.
ZPoly zp_gcd(ZPoly a, ZPoly b) {
    a = zp_primitive(std::move(a));
    b = zp_primitive(std::move(b));
    if (zp_is_zero(a)) return b;
    if (zp_is_zero(b)) return a;
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!zp_is_zero(b)) {
        ZPoly r = zp_primitive(zp_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact division, pre: b | a with b primitive.
ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
    if (zp_is_zero(a)) return {};
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1, mpz_class(0));
    const mpz_class& lb = b.back();
    while (!zp_is_zero(rem) && zp_deg(rem) >= zp_deg(b)) {
        int shift = zp_deg(rem) - zp_deg(b);
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), rem.back().get_mpz_t(), lb.get_mpz_t());
        q[shift] = qc;
        for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= qc * b[i];
        zp_trim(rem);
    }
    return q;
}

Rat zp_eval(const ZPoly& p, const Rat& a0) {
    Rat v;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * a0 + Rat(*it);
    return v;
}

std::string zp_str(const ZPoly& p) {
    if (zp_is_zero(p)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = zp_deg(p); i >= 0; --i) {
        const mpz_class& c = p[i];
        if (c == 0) continue;
        mpz_class ac = ::abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        bool unit = (ac == 1);
        if (i == 0) {
            os << ac.get_str();
        } else {
            if (!unit) os << ac.get_str() << '*';
            os << 'a';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

// Splits a rational-coefficient polynomial into content * primitive ZPoly.
std::pair<Rat, ZPoly> to_primitive(const ParamPoly& p) {
    if (p.is_zero()) return {Rat(0), ZPoly{}};
    mpz_class den_lcm = 1;
    for (int i = 0; i <= p.degree(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p.coeff(i).den().get_mpz_t());
    ZPoly z(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        const Rat& c = p.coeff(i);
        z[i] = c.num() * (den_lcm / c.den());
    }
    mpz_class cont = zp_content(z);
    z = zp_divexact_scalar(z, cont);
    return {Rat(cont, den_lcm), z};
}

}  // namespace

// ---- ParamPoly -------------------------------------------------------------

ParamPoly::ParamPoly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

ParamPoly ParamPoly::param() {
    ParamPoly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

ParamPoly ParamPoly::from_coeffs(std::vector<Rat> coeffs) {
    ParamPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

void ParamPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& ParamPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kRatZero;
    return c_[i];
}

const Rat& ParamPoly::leading() const {
    if (is_zero()) throw std::domain_error("ParamPoly: zero polynomial has no leading coefficient");
    return c_.back();
}

Rat ParamPoly::eval(const Rat& a0) const {
    Rat v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * a0 + *it;
    return v;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ParamPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
}

std::string ParamPoly::str() const { return ParamRat(*this).str(); }

// ---- ParamRat ---------------------------------------------------------------

ParamRat::ParamRat() : content_(0), num_{1}, den_{1} {}

ParamRat::ParamRat(const Rat& c) : content_(c), num_{1}, den_{1} {}

ParamRat::ParamRat(const ParamPoly& p) {
    auto [c, z] = to_primitive(p);
    canonicalize_from(c, std::move(z), ZPoly{1});
}

ParamRat::ParamRat(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw std::domain_error("ParamRat: division by zero");
    auto [cn, zn] = to_primitive(num);
    auto [cd, zd] = to_primitive(den);
    canonicalize_from(cn / cd, std::move(zn), std::move(zd));
}

ParamRat ParamRat::param() { return ParamRat(ParamPoly::param()); }

void ParamRat::canonicalize_from(const Rat& c, ZPoly n, ZPoly d) {
    // pre: n, d primitive with positive leading coefficients (or n empty).
    if (c.is_zero() || zp_is_zero(n)) {
        content_ = Rat(0);
        num_ = {1};
        den_ = {1};
        return;
    }
    ZPoly g = zp_gcd(n, d);
    if (zp_deg(g) > 0 || g[0] != 1) {
        n = zp_divexact(n, g);
        d = zp_divexact(d, g);
    }
    content_ = c;
    num_ = std::move(n);
    den_ = std::move(d);
}

bool ParamRat::is_one() const {
    return content_.is_one() && num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

bool ParamRat::is_constant() const {
    return num_.size() == 1 && den_.size() == 1;
}

Rat ParamRat::constant_value() const {
    if (!is_constant()) throw std::domain_error("ParamRat: not a constant");
    return content_ * Rat(num_[0], den_[0]);
}

bool ParamRat::is_sum() const {
    if (!is_polynomial()) return false;
    int nterms = 0;
    for (const auto& c : num_)
        if (c != 0) ++nterms;
    return nterms > 1;
}

ParamPoly ParamRat::num() const {
    std::vector<Rat> c(num_.size());
    Rat scale = content_ * Rat(den_.back());
    for (size_t i = 0; i < num_.size(); ++i) c[i] = Rat(num_[i]) * scale;
    return ParamPoly::from_coeffs(std::move(c));
}

ParamPoly ParamRat::den() const {
    std::vector<Rat> c(den_.size());
    Rat lead = Rat(den_.back()).inv();
    for (size_t i = 0; i < den_.size(); ++i) c[i] = Rat(den_[i]) * lead;
    return ParamPoly::from_coeffs(std::move(c));
}

bool ParamRat::pole_at(const Rat& a0) const { return zp_eval(den_, a0).is_zero(); }

Rat ParamRat::specialize(const Rat& a0) const {
    Rat d = zp_eval(den_, a0);
    if (d.is_zero())
        throw std::domain_error("ParamRat: specialization pole at a = " + a0.str());
    return content_ * zp_eval(num_, a0) / d;
}

ParamRat ParamRat::operator-() const {
    ParamRat r = *this;
    r.content_ = -r.content_;
    return r;
}

ParamRat ParamRat::inv() const {
    if (is_zero()) throw std::domain_error("ParamRat: division by zero");
    ParamRat r;
    r.content_ = content_.inv();
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

ParamRat& ParamRat::operator*=(const ParamRat& o) {
    if (is_zero() || o.is_zero()) {
        *this = ParamRat();
        return *this;
    }
    ZPoly g1 = zp_gcd(num_, o.den_);
    ZPoly g2 = zp_gcd(o.num_, den_);
    ZPoly n = zp_mul(zp_divexact(num_, g1), zp_divexact(o.num_, g2));
    ZPoly d = zp_mul(zp_divexact(den_, g2), zp_divexact(o.den_, g1));
    content_ *= o.content_;
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

ParamRat& ParamRat::operator/=(const ParamRat& o) { return *this *= o.inv(); }

ParamRat& ParamRat::operator+=(const ParamRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    // content as p/q: combine c1*n1/d1 + c2*n2/d2 over the integer lcm of q1, q2.
    mpz_class lcm;
    mpz_lcm(lcm.get_mpz_t(), content_.den().get_mpz_t(), o.content_.den().get_mpz_t());
    mpz_class s1 = content_.num() * (lcm / content_.den());
    mpz_class s2 = o.content_.num() * (lcm / o.content_.den());
    ZPoly t1 = zp_scale(zp_mul(num_, o.den_), s1);
    ZPoly t2 = zp_scale(zp_mul(o.num_, den_), s2);
    ZPoly n(std::max(t1.size(), t2.size()), mpz_class(0));
    for (size_t i = 0; i < t1.size(); ++i) n[i] += t1[i];
    for (size_t i = 0; i < t2.size(); ++i) n[i] += t2[i];
    zp_trim(n);
    ZPoly d = zp_mul(den_, o.den_);
    if (zp_is_zero(n)) {
        *this = ParamRat();
        return *this;
    }
    mpz_class cont = zp_content(n);
    n = zp_divexact_scalar(n, cont);
    canonicalize_from(Rat(cont, lcm), std::move(n), std::move(d));
    return *this;
}

ParamRat& ParamRat::operator-=(const ParamRat& o) { return *this += -o; }

std::string ParamRat::str() const {
    if (is_zero()) return "0";
    // integer-cleared numerator and denominator
    ZPoly n = zp_scale(num_, content_.num());
    ZPoly d = zp_scale(den_, content_.den());
    std::string sn = zp_str(n);
    if (d.size() == 1 && d[0] == 1) return sn;
    auto multiterm = [](const ZPoly& p) {
        int k = 0;
        for (const auto& c : p)
            if (c != 0) ++k;
        return k > 1;
    };
    auto needs_paren_den = [&](const ZPoly& p) {
        // "3", "a", "a^2" are safe to the right of '/'; "2*a" or sums are not.
        if (multiterm(p)) return true;
        return zp_deg(p) >= 1 && !(p.back() == 1);
    };
    std::string sd = zp_str(d);
    if (multiterm(n) || n.back() < 0) sn = "(" + sn + ")";
    if (needs_paren_den(d)) sd = "(" + sd + ")";
    return sn + "/" + sd;
}

}  // namespace galg
