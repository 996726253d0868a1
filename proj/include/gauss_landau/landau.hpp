#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gauss_landau/bigint.hpp"

namespace gauss_landau {

// Non-increasing positive parts summing to n.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts are positive and non-increasing.
  explicit Partition(std::vector<std::uint32_t> parts);

  std::span<const std::uint32_t> parts() const& { return parts_; }
  std::span<const std::uint32_t> parts() const&& = delete;
  std::uint32_t n() const { return n_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
  std::uint32_t n_ = 0;
};

// Partitions of n in reverse-lexicographic order, starting from (n) and
// ending at (1, ..., 1). n = 0 yields the single empty partition.
class PartitionStream {
 public:
  explicit PartitionStream(std::uint32_t n);

  // Advances to the next partition; false once exhausted. The first call
  // produces (n).
  bool next();
  std::span<const std::uint32_t> parts() const& { return parts_; }
  std::span<const std::uint32_t> parts() const&& = delete;

 private:
  std::uint32_t n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::uint32_t> parts_;
};

std::vector<Partition> partitions(std::uint32_t n);

inline constexpr std::uint32_t kBruteForceLimit = 60;
inline constexpr std::uint32_t kDpLimit = 10'000;

struct LandauRecord {
  std::uint32_t n = 0;
  BigInt value = 1;
  Partition witness;
  std::optional<double> ratio;  // ln(value) / sqrt(n ln n); none for n = 1
  std::optional<std::uint64_t> partitions_enumerated;  // brute force only
};

// ln(value) / sqrt(n ln n), or nullopt when n < 2.
std::optional<double> asymptotic_ratio(std::uint32_t n, const BigInt& value);

// Maximum lcm over every partition of n, 1 <= n <= kBruteForceLimit. The
// witness is the first maximizer in enumeration order.
LandauRecord landau_bruteforce(std::uint32_t n);

// Best products of distinct prime powers under every budget 1..n_max.
// Cell b holds the largest product of prime powers p^e (distinct p) whose
// sum is at most b, which is g(b).
class LandauTable {
 public:
  // 1 <= n_max <= kDpLimit.
  explicit LandauTable(std::uint32_t n_max);

  std::uint32_t n_max() const { return n_max_; }
  const BigInt& value(std::uint32_t n) const;
  // Prime powers of the optimum (descending), padded with 1s to sum to n.
  Partition witness(std::uint32_t n) const;
  LandauRecord record(std::uint32_t n) const;

 private:
  std::uint32_t n_max_;
  std::vector<std::uint64_t> primes_;
  std::vector<BigInt> best_;
  // choice_[i * (n_max + 1) + b]: exponent of primes_[i] chosen at budget b
  // when primes_[0..i] were available.
  std::vector<std::uint8_t> choice_;
};

LandauRecord landau_dp(std::uint32_t n);

// Rows n = 2, 2 + step, ... <= n_max from a single DP table.
std::vector<LandauRecord> asymptotic_table(std::uint32_t n_max, std::uint32_t step);

}  // namespace gauss_landau
