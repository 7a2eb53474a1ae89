#pragma once

#include "galg/current.hpp"

#include <string>

namespace galg {

/// Builds a Lie structure and truncation from a JSON config string:
///
///   {"lie": "sl2", "truncation": ["0", "a"]}
///   {"lie": {"names": ["x","y"], "brackets": [{"left":"x","right":"y","value":{"y":"2"}}]},
///    "truncation": ["0", "a"]}
///
/// "truncation" lists p_0 ... p_{m-1} of the monic divisor t^m - sum p_i t^i
/// as coefficient strings.  Returns the constructed algebra.
GAlgebra algebra_from_config(const std::string& json_text);

LieStructure lie_from_config(const std::string& json_text);

}  // namespace galg
