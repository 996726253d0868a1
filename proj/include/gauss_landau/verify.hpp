#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gauss_landau {

enum class SweepKind { kProduct, kDistributive, kOracle, kRoundtrip };

std::optional<SweepKind> parse_sweep_kind(std::string_view name);
std::string_view sweep_kind_name(SweepKind kind);

struct Counterexample {
  std::vector<std::uint64_t> inputs;
  std::string detail;
};

struct SweepReport {
  SweepKind kind = SweepKind::kProduct;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::uint64_t max = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<Counterexample> first_failure;
};

// Draws `count` tuples uniformly from [1, max] with SplitMix64(seed); tuple
// components are consecutive draws. product and oracle draw pairs,
// distributive draws triples, roundtrip draws single values.
//   product:      a*b == gcd*lcm
//   distributive: both routes of the three-way identity agree
//   oracle:       exponent gcd == Euclidean gcd
//   roundtrip:    reconstruct(factorize(n)) == n
// count >= 1 and max >= 2, else DomainError.
SweepReport verify_sweep(SweepKind kind, std::uint64_t count, std::uint64_t seed,
                         std::uint64_t max);

}  // namespace gauss_landau
