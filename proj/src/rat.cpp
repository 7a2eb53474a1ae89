#include "galg/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace galg {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(n) / mpq_class(d);
    q_.canonicalize();
}

Rat::Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rat Rat::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: malformed rational '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("Rat: division by zero");
    Rat r;
    r.q_ = 1 / q_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace galg
