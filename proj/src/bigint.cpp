#include "gauss_landau/bigint.hpp"

#include <cmath>
#include <numbers>

#include "gauss_landau/errors.hpp"

namespace gauss_landau {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') pos = 1;
  if (pos == text.size()) throw DomainError("not a decimal integer: '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw DomainError("not a decimal integer: '" + text + "'");
    }
  }
  BigInt magnitude(text.substr(pos));
  return pos == 1 ? BigInt(-magnitude) : magnitude;
}

double natural_log(const BigInt& value) {
  if (value <= 0) throw DomainError("logarithm defined for positive integers");
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 53) return std::log(value.convert_to<double>());
  const std::size_t shift = bits - 53;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

std::uint64_t checked_magnitude(const BigInt& value, const char* what) {
  if (value == 0) {
    throw DomainError(std::string(what) + ": zero excluded, inputs must be nonzero integers");
  }
  const BigInt magnitude = abs(value);
  if (magnitude > kMaxInput) {
    throw DomainError(std::string(what) + ": |" + value.str() + "| exceeds 2^64 - 1");
  }
  return magnitude.convert_to<std::uint64_t>();
}

}  // namespace gauss_landau
