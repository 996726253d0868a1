#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gauss_landau/bigint.hpp"

namespace gauss_landau {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline constexpr std::uint64_t kTrialDivisionCutoff = 1'000'000;
inline constexpr std::uint64_t kDefaultRhoSeed = 0x6A09E667F3BCC908ULL;

struct FactorizeOptions {
  // Seeds Pollard rho. Only running time depends on it.
  std::uint64_t rho_seed = kDefaultRhoSeed;
};

// Canonical prime factorization of a positive integer: primes strictly
// ascending, every exponent >= 1. A prime that does not appear has
// exponent 0. No entries means the integer 1.
class Factorization {
 public:
  Factorization() = default;

  // Validates the canonical-form invariants; throws DomainError.
  static Factorization from_entries(std::vector<PrimePower> entries);

  std::span<const PrimePower> entries() const& { return entries_; }
  std::span<const PrimePower> entries() const&& = delete;
  bool is_one() const { return entries_.empty(); }
  std::uint32_t exponent_of(std::uint64_t prime) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  struct Trusted {};
  Factorization(Trusted, std::vector<PrimePower> entries) : entries_(std::move(entries)) {}
  friend Factorization factorize(std::uint64_t n, const FactorizeOptions& options);

  std::vector<PrimePower> entries_;
};

// n >= 1; n = 0 throws DomainError.
Factorization factorize(std::uint64_t n, const FactorizeOptions& options = {});
// Rejects zero, negatives and values above 2^64 - 1.
Factorization factorize(const BigInt& n, const FactorizeOptions& options = {});

BigInt reconstruct(const Factorization& f);

// Deterministic over the full 64-bit range.
bool is_prime(std::uint64_t n);

// Ascending primes in [2, limit]; empty for limit < 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace gauss_landau
