#pragma once

#include "galg/galgebra.hpp"

#include <string>

namespace galg {

/// Canonical text form of an element: terms in descending monomial order,
/// each monomial spelled as its standard word (descending generator index),
/// e.g. "2*f1^2*f0 - a*h1".  parse_poly(A, poly_str(A, f)) == f exactly.
std::string poly_str(const GAlgebra& A, const NcPoly& f);

/// Parses +,-,*,/,^ expressions over the algebra's generators, the parameter
/// "a" and integer literals.  '/' requires a coefficient-only divisor;
/// '^' requires a nonnegative integer exponent.
NcPoly parse_poly(const GAlgebra& A, const std::string& text);

/// Same grammar restricted to the parameter only.
ParamRat parse_paramrat(const std::string& text);

}  // namespace galg
