#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gauss_landau/bigint.hpp"

namespace gauss_landau {

class CycleDecomposition {
 public:
  // Positive lengths; stored non-increasing; n is their sum. Throws
  // DomainError on an empty list or a zero length.
  static CycleDecomposition from_lengths(std::vector<std::uint32_t> lengths);

  std::uint32_t n() const { return n_; }
  std::span<const std::uint32_t> cycle_lengths() const& { return lengths_; }
  std::span<const std::uint32_t> cycle_lengths() const&& = delete;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> lengths_;
};

// perm is one-line notation, 1-based: perm[i - 1] is the image of i.
// Throws DomainError naming the first index whose image is out of range
// or repeats an earlier image.
void check_bijection(std::span<const std::uint32_t> perm);

CycleDecomposition cycle_decompose(std::span<const std::uint32_t> perm);

// lcm of the cycle lengths.
BigInt order(const CycleDecomposition& d);

// True iff perm composed with itself m times is the identity. m >= 1.
bool verify_order(std::span<const std::uint32_t> perm, const BigInt& m);

}  // namespace gauss_landau
