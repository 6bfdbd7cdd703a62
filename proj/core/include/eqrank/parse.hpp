#pragma once

#include <string_view>

#include "eqrank/algebra.hpp"

namespace eqrank {

/// Reads expressions like "E7xA1" or "a4 X A4": simple factors (a letter
/// A-G and a decimal rank) joined by 'x'. Letters are case-insensitive and
/// whitespace is ignored. Syntax errors throw ParseError with the byte
/// offset; out-of-range ranks throw InvalidType naming the bound.
SemisimpleAlgebra parse_algebra(std::string_view text);

/// One simple factor, same rules.
SimpleType parse_simple_type(std::string_view text);

}  // namespace eqrank
