#include "gauss_landau/verify.hpp"

#include <array>

#include "gauss_landau/errors.hpp"
#include "gauss_landau/factorization.hpp"
#include "gauss_landau/gcd_lcm.hpp"
#include "gauss_landau/rng.hpp"

namespace gauss_landau {
namespace {

constexpr std::array<std::pair<std::string_view, SweepKind>, 4> kKinds = {{
    {"product", SweepKind::kProduct},
    {"distributive", SweepKind::kDistributive},
    {"oracle", SweepKind::kOracle},
    {"roundtrip", SweepKind::kRoundtrip},
}};

std::size_t arity(SweepKind kind) {
  switch (kind) {
    case SweepKind::kDistributive: return 3;
    case SweepKind::kRoundtrip: return 1;
    default: return 2;
  }
}

// Empty string on success, otherwise a description of the mismatch.
std::string check(SweepKind kind, const std::vector<std::uint64_t>& x) {
  switch (kind) {
    case SweepKind::kProduct: {
      const ProductIdentityReport r = check_product_identity(x[0], x[1]);
      if (r.holds) return {};
      return "a*b = " + to_decimal(r.product) + " but gcd*lcm = " + to_decimal(r.gcd_times_lcm);
    }
    case SweepKind::kDistributive: {
      const DistributiveIdentityReport r = check_distributive_identity(x[0], x[1], x[2]);
      if (r.holds) return {};
      return "lhs = " + to_decimal(r.lhs) + ", rhs = " + to_decimal(r.rhs) + ", exponent lhs = " +
             to_decimal(r.lhs_exponent) + ", exponent rhs = " + to_decimal(r.rhs_exponent);
    }
    case SweepKind::kOracle: {
      const std::array<std::uint64_t, 2> pair = {x[0], x[1]};
      const std::uint64_t lattice = gcd_lcm_set(std::span<const std::uint64_t>(pair)).gcd;
      const std::uint64_t euclid = gcd_euclid(x[0], x[1]);
      if (lattice == euclid) return {};
      return "exponent gcd = " + std::to_string(lattice) + ", Euclid gcd = " + std::to_string(euclid);
    }
    case SweepKind::kRoundtrip: {
      const BigInt back = reconstruct(factorize(x[0]));
      if (back == x[0]) return {};
      return "reconstructed " + to_decimal(back);
    }
  }
  return "unknown sweep kind";
}

}  // namespace

std::optional<SweepKind> parse_sweep_kind(std::string_view name) {
  for (const auto& [text, kind] : kKinds) {
    if (text == name) return kind;
  }
  return std::nullopt;
}

std::string_view sweep_kind_name(SweepKind kind) {
  for (const auto& [text, k] : kKinds) {
    if (k == kind) return text;
  }
  return "unknown";
}

SweepReport verify_sweep(SweepKind kind, std::uint64_t count, std::uint64_t seed, std::uint64_t max) {
  if (count < 1) throw DomainError("verify count must be >= 1");
  if (max < 2) throw DomainError("verify max must be >= 2");

  SweepReport report{kind, count, seed, max, 0, 0, std::nullopt};
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> tuple(arity(kind));
  for (std::uint64_t i = 0; i < count; ++i) {
    for (auto& v : tuple) v = rng.uniform(1, max);
    std::string detail = check(kind, tuple);
    if (detail.empty()) {
      ++report.passed;
      continue;
    }
    ++report.failed;
    if (!report.first_failure) report.first_failure = Counterexample{tuple, std::move(detail)};
  }
  return report;
}

}  // namespace gauss_landau
