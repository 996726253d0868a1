#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gauss_landau/bigint.hpp"
#include "gauss_landau/exponent_lattice.hpp"

namespace gauss_landau {

struct GcdLcmResult {
  std::uint64_t gcd = 1;
  BigInt lcm = 1;
  PrimeSupport support;
  ExponentVector min_exponents;
  ExponentVector max_exponents;
};

// gcd and lcm of a nonempty list of nonzero integers from one alignment of
// their factorizations: gcd from the meet, lcm from the join. Signs are
// dropped; |a_i| must not exceed 2^64 - 1.
GcdLcmResult gcd_lcm_set(std::span<const BigInt> values);
GcdLcmResult gcd_lcm_set(std::span<const std::uint64_t> values);

// Euclid's remainder recursion on |a|, |b|. Only a = b = 0 is rejected.
BigInt gcd_euclid(const BigInt& a, const BigInt& b);
std::uint64_t gcd_euclid(std::uint64_t a, std::uint64_t b);

struct ReducedRatio {
  std::uint64_t left = 1;
  std::uint64_t right = 1;

  friend bool operator==(const ReducedRatio&, const ReducedRatio&) = default;
};

// Least terms of |a| : |b|. Zero throws DomainError.
ReducedRatio reduce_ratio(const BigInt& a, const BigInt& b);

struct ProductIdentityReport {
  BigInt product;         // a * b
  std::uint64_t gcd = 1;
  BigInt lcm;
  BigInt gcd_times_lcm;
  bool holds = false;
};

ProductIdentityReport check_product_identity(std::uint64_t a, std::uint64_t b);

struct PrimeExponentRow {
  std::uint64_t prime = 0;
  std::uint32_t min_of_max = 0;  // exponent of gcd(lcm(a,b), lcm(b,c), lcm(a,c))
  std::uint32_t max_of_min = 0;  // exponent of lcm(gcd(a,b), gcd(b,c), gcd(a,c))
};

// gcd(lcm(a,b), lcm(b,c), lcm(a,c)) against lcm(gcd(a,b), gcd(b,c), gcd(a,c)),
// evaluated once through nested gcd_lcm_set calls and once prime by prime.
struct DistributiveIdentityReport {
  BigInt lhs;           // integer route
  BigInt rhs;
  BigInt lhs_exponent;  // reconstructed from min-of-pairwise-max
  BigInt rhs_exponent;  // reconstructed from max-of-pairwise-min
  std::vector<PrimeExponentRow> per_prime;
  bool holds = false;
};

DistributiveIdentityReport check_distributive_identity(std::uint64_t a, std::uint64_t b,
                                                       std::uint64_t c);

}  // namespace gauss_landau
