#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gauss_landau/bigint.hpp"
#include "gauss_landau/factorization.hpp"

namespace gauss_landau {

// Ascending distinct primes p_1..p_k shared by a family of exponent vectors.
class PrimeSupport {
 public:
  PrimeSupport();
  // Throws DomainError unless strictly ascending and all prime.
  explicit PrimeSupport(std::vector<std::uint64_t> primes);

  std::span<const std::uint64_t> primes() const& { return *primes_; }
  std::span<const std::uint64_t> primes() const&& = delete;
  std::size_t size() const { return primes_->size(); }

  friend bool operator==(const PrimeSupport& a, const PrimeSupport& b);

 private:
  std::shared_ptr<const std::vector<std::uint64_t>> primes_;
};

// Exponents of one integer over a PrimeSupport; zeros allowed.
class ExponentVector {
 public:
  ExponentVector() = default;
  // Throws DomainError if the lengths differ.
  ExponentVector(PrimeSupport support, std::vector<std::uint32_t> exponents);

  static ExponentVector zero(PrimeSupport support);

  const PrimeSupport& support() const { return support_; }
  std::span<const std::uint32_t> exponents() const& { return exponents_; }
  std::span<const std::uint32_t> exponents() const&& = delete;
  std::size_t size() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t j) const { return exponents_[j]; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  PrimeSupport support_;
  std::vector<std::uint32_t> exponents_;
};

struct AlignedFactorizations {
  PrimeSupport support;
  std::vector<ExponentVector> vectors;  // same order as the input
};

// Union support with zero-fill. Empty input throws DomainError.
AlignedFactorizations align(std::span<const Factorization> factorizations);

// Position-wise min / max. Empty input or mismatched supports throw.
ExponentVector meet(std::span<const ExponentVector> vectors);
ExponentVector join(std::span<const ExponentVector> vectors);

ExponentVector add(const ExponentVector& a, const ExponentVector& b);

// a[j] >= b[j] for all j, i.e. integer(b) divides integer(a).
bool dominates(const ExponentVector& a, const ExponentVector& b);

BigInt reconstruct(const ExponentVector& v);
Factorization to_factorization(const ExponentVector& v);

}  // namespace gauss_landau
