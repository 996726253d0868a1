#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gauss_landau {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kMaxInput = ~std::uint64_t{0};

std::string to_decimal(const BigInt& value);

// Strict decimal parse: optional leading '-', then one or more digits.
// Throws DomainError on anything else.
BigInt parse_decimal(const std::string& text);

// Natural logarithm of a positive integer of any size.
double natural_log(const BigInt& value);

// |value| as uint64_t; throws DomainError when value is zero or |value|
// exceeds 2^64 - 1. `what` names the argument in the message.
std::uint64_t checked_magnitude(const BigInt& value, const char* what);

}  // namespace gauss_landau
