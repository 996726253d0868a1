#include <doctest.h>

#include "gauss_landau/errors.hpp"
#include "gauss_landau/rng.hpp"
#include "gauss_landau/verify.hpp"

using namespace gauss_landau;

TEST_CASE("SplitMix64 reference outputs") {
  // Published SplitMix64 values for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("uniform stays in range and covers it") {
  SplitMix64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.uniform(3, 9);
    REQUIRE(v >= 3);
    REQUIRE(v <= 9);
    ++hits[v - 3];
  }
  for (int h : hits) CHECK(h > 800);
  CHECK(SplitMix64(5).uniform(0, ~std::uint64_t{0}) == SplitMix64(5).next());
}

TEST_CASE("sweep kinds") {
  CHECK(parse_sweep_kind("product") == SweepKind::kProduct);
  CHECK(parse_sweep_kind("roundtrip") == SweepKind::kRoundtrip);
  CHECK_FALSE(parse_sweep_kind("Product").has_value());
  CHECK(sweep_kind_name(SweepKind::kDistributive) == "distributive");
}

TEST_CASE("sweeps pass and are reproducible") {
  for (SweepKind kind : {SweepKind::kProduct, SweepKind::kDistributive, SweepKind::kOracle, SweepKind::kRoundtrip}) {
    const auto a = verify_sweep(kind, 300, 42, 100'000);
    CHECK(a.passed == 300);
    CHECK(a.failed == 0);
    CHECK_FALSE(a.first_failure.has_value());
  }
  CHECK_THROWS_AS(verify_sweep(SweepKind::kProduct, 0, 1, 10), DomainError);
  CHECK_THROWS_AS(verify_sweep(SweepKind::kProduct, 1, 1, 1), DomainError);
}
