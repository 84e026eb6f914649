#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace k72 {

// Exact arbitrary-precision integers and rationals. Every quantity in this
// library is computed in these types; nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical rendering: integers as plain decimal ("-3", "72"), everything
// else as "p/q" in lowest terms with the sign on p ("-7/2").
std::string rat_to_string(const Rat& x);

// Inverse of rat_to_string. Accepts optional sign, "p" or "p/q" with q > 0
// after normalization. Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& text);

bool rat_is_integer(const Rat& x);

// Exact conversion to Int; throws std::invalid_argument unless integral.
Int rat_to_int(const Rat& x);

}  // namespace k72
