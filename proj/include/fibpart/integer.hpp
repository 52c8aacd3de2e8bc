#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibpart {

/// Arbitrary precision signed integer used for every count and coordinate.
using Integer = boost::multiprecision::cpp_int;

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

/// Quotient rounded toward negative infinity; d must be nonzero.
Integer floor_div(const Integer& n, const Integer& d);

/// Number of bits in |n| (0 for n == 0).
std::size_t bit_length(const Integer& n);

Integer pow10(unsigned exponent);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);

/// Narrowing conversion that throws std::overflow_error when out of range.
std::uint64_t to_u64(const Integer& n);

}  // namespace fibpart
