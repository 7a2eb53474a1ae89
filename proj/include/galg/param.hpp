#pragma once

#include "galg/rat.hpp"

#include <string>
#include <vector>

namespace galg {

/// Integer polynomial in the parameter, dense by degree, trailing entry nonzero.
using ZPoly = std::vector<mpz_class>;

/// Dense univariate polynomial in the central parameter "a" with rational
/// coefficients.  The zero polynomial has an empty coefficient list.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rat& c);
    ParamPoly(long c) : ParamPoly(Rat(c)) {}
    static ParamPoly param();  // the parameter itself
    static ParamPoly from_coeffs(std::vector<Rat> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& coeff(int i) const;
    const Rat& leading() const;  // throws on zero

    Rat eval(const Rat& a0) const;

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

    bool operator==(const ParamPoly&) const = default;

    std::string str() const;

private:
    std::vector<Rat> c_;
    void normalize();
};

/// Rational function in the parameter over the rationals, held canonically as
///
///     value = content * num / den
///
/// with num and den primitive integer polynomials with positive leading
/// coefficients and gcd(num, den) = 1.  Zero is (0, 1, 1).  Two values are
/// equal as rational functions iff their representations are identical.
class ParamRat {
public:
    ParamRat();
    ParamRat(const Rat& c);
    ParamRat(long c) : ParamRat(Rat(c)) {}
    ParamRat(int c) : ParamRat(Rat(c)) {}
    ParamRat(const ParamPoly& p);
    ParamRat(const ParamPoly& num, const ParamPoly& den);  // throws on zero den
    static ParamRat param();

    bool is_zero() const { return content_.is_zero(); }
    bool is_one() const;
    bool is_constant() const;
    /// Value as a Rat; pre: is_constant().
    Rat constant_value() const;
    /// True when either numerator or denominator genuinely involves the parameter.
    bool has_param() const { return !is_constant(); }
    /// True when the reduced denominator is 1 (value is polynomial in a).
    bool is_polynomial() const { return den_.size() == 1 && den_[0] == 1; }
    bool is_sum() const;  // printed form has a top-level + or -

    /// Numerator over the monic denominator (content folded into num()).
    ParamPoly num() const;
    ParamPoly den() const;

    const Rat& content() const { return content_; }
    const ZPoly& num_primitive() const { return num_; }
    const ZPoly& den_primitive() const { return den_; }

    /// Evaluate at a rational point; throws std::domain_error("specialization
    /// pole ...") when the reduced denominator vanishes there.
    Rat specialize(const Rat& a0) const;
    bool pole_at(const Rat& a0) const;

    ParamRat operator-() const;
    ParamRat inv() const;  // throws on zero

    ParamRat& operator+=(const ParamRat& o);
    ParamRat& operator-=(const ParamRat& o);
    ParamRat& operator*=(const ParamRat& o);
    ParamRat& operator/=(const ParamRat& o);  // throws on zero divisor

    friend ParamRat operator+(ParamRat a, const ParamRat& b) { return a += b; }
    friend ParamRat operator-(ParamRat a, const ParamRat& b) { return a -= b; }
    friend ParamRat operator*(ParamRat a, const ParamRat& b) { return a *= b; }
    friend ParamRat operator/(ParamRat a, const ParamRat& b) { return a /= b; }

    bool operator==(const ParamRat&) const = default;

    /// Canonical text form with integer coefficients, e.g. "(2*a^2-1)/(a+3)".
    std::string str() const;
    /// Parses anything the printer emits (and general +,-,*,/,^ expressions
    /// in the parameter).  Implemented in parse.cpp.
    static ParamRat from_string(const std::string& s);

private:
    Rat content_;
    ZPoly num_;
    ZPoly den_;
    void canonicalize_from(const Rat& c, ZPoly n, ZPoly d);
};

}  // namespace galg
