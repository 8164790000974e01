#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace aksbench {

/// Arbitrary-precision non-negative integer. All arithmetic is exact; the
/// library never stores a negative value in a Natural.
using Natural = boost::multiprecision::cpp_int;

/// Parses a non-negative integer literal. Decimal by default, hexadecimal
/// with a "0x"/"0X" prefix; underscores may be used as digit separators
/// ("1_000_003"). Throws std::invalid_argument on anything else.
Natural parse_natural(std::string_view text);

bool fits_uint64(const Natural& value);

/// Narrowing accessor; caller must have checked fits_uint64.
std::uint64_t to_uint64(const Natural& value);

}  // namespace aksbench
