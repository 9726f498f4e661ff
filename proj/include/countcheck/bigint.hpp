#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace countcheck {

// Exact signed integer of arbitrary precision. Coefficient bit-length is part
// of the input-size measure, so fixed-width integers are never used for
// coefficients anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;

// Bits needed to write |x|; bit_length(0) == 1 (a single digit).
inline std::uint64_t bit_length(const BigInt& x) {
  if (x == 0) return 1;
  const BigInt mag = boost::multiprecision::abs(x);
  return static_cast<std::uint64_t>(boost::multiprecision::msb(mag)) + 1;
}

}  // namespace countcheck
