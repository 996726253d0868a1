#include <doctest.h>

#include "gauss_landau/errors.hpp"
#include "gauss_landau/factorization.hpp"
#include "gauss_landau/rng.hpp"
#include "oracles.hpp"

using namespace gauss_landau;

namespace {

std::vector<PrimePower> entries_of(const Factorization& f) {
  return {f.entries().begin(), f.entries().end()};
}

bool canonical(const Factorization& f) {
  const auto e = f.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].exponent < 1 || !is_prime(e[i].prime)) return false;
    if (i > 0 && e[i - 1].prime >= e[i].prime) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("factorize worked examples") {
  CHECK(entries_of(factorize(60)) == std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
  CHECK(factorize(1).is_one());
  CHECK(entries_of(factorize(97)) == std::vector<PrimePower>{{97, 1}});
  CHECK(factorize(60).exponent_of(7) == 0);
  CHECK(factorize(60).exponent_of(2) == 2);
}

TEST_CASE("factorize rejects non-positive input") {
  CHECK_THROWS_AS(factorize(std::uint64_t{0}), DomainError);
  CHECK_THROWS_AS(factorize(BigInt(-12)), DomainError);
  CHECK_THROWS_AS(factorize(BigInt(0)), DomainError);
  CHECK_THROWS_AS(factorize(BigInt(kMaxInput) + 1), DomainError);
  CHECK_THROWS_WITH(factorize(std::uint64_t{0}), "factorization defined for positive integers");
}

TEST_CASE("reconstruct") {
  CHECK(reconstruct(Factorization::from_entries({{2, 2}, {3, 1}, {5, 1}})) == 60);
  CHECK(reconstruct(Factorization{}) == 1);
  CHECK(reconstruct(Factorization::from_entries({{2, 4}, {3, 1}})) == 48);
  // Beyond 64 bits.
  CHECK(reconstruct(Factorization::from_entries({{2, 70}})) == BigInt(1) << 70);
}

TEST_CASE("from_entries enforces canonical form") {
  CHECK_THROWS_AS(Factorization::from_entries({{4, 1}}), DomainError);
  CHECK_THROWS_AS(Factorization::from_entries({{3, 1}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(Factorization::from_entries({{2, 1}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(Factorization::from_entries({{2, 0}}), DomainError);
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(0).empty());

  std::vector<std::uint64_t> by_trial;
  for (std::uint64_t n = 2; n <= 30; ++n) {
    if (oracles::is_prime_trial(n)) by_trial.push_back(n);
  }
  CHECK(primes_up_to(30) == by_trial);
  CHECK(by_trial == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(561));  // 3 * 11 * 17
  for (std::uint64_t carmichael : {561, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265}) {
    CHECK_FALSE(is_prime(carmichael));
  }
  // Strong pseudoprime to every prime base up to 37.
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(kMaxInput));
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967291ULL * 4294967279ULL));
}

TEST_CASE("sieve agrees with trial-division primality up to 1e5") {
  const auto primes = primes_up_to(100'000);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    const bool listed = idx < primes.size() && primes[idx] == n;
    if (listed) ++idx;
    REQUIRE(listed == is_prime(n));
    if (n < 5'000) REQUIRE(listed == oracles::is_prime_trial(n));
  }
  CHECK(idx == primes.size());
  CHECK(primes.size() == 9592);
}

TEST_CASE("round trip and canonical form") {
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const Factorization f = factorize(n);
    REQUIRE(canonical(f));
    REQUIRE(reconstruct(f) == n);
  }
  SplitMix64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t n = rng.uniform(1, kMaxInput);
    const Factorization f = factorize(n);
    REQUIRE(canonical(f));
    REQUIRE(reconstruct(f) == n);
  }
}

TEST_CASE("hard 64-bit composites") {
  const std::uint64_t p = 4294967291ULL, q = 4294967279ULL;
  CHECK(entries_of(factorize(p * q)) == std::vector<PrimePower>{{q, 1}, {p, 1}});
  CHECK(entries_of(factorize(p * p)) == std::vector<PrimePower>{{p, 2}});
  CHECK(entries_of(factorize(3825123056546413051ULL)) ==
        std::vector<PrimePower>{{149491, 1}, {747451, 1}, {34233211, 1}});
  CHECK(entries_of(factorize(std::uint64_t{1} << 63)) == std::vector<PrimePower>{{2, 63}});
  CHECK(entries_of(factorize(kMaxInput)) ==
        std::vector<PrimePower>{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}});
  // Three prime factors above the trial-division cutoff.
  const std::uint64_t r = 1000003, s = 1000033, t = 1000037;
  CHECK(entries_of(factorize(r * s * t)) == std::vector<PrimePower>{{r, 1}, {s, 1}, {t, 1}});
}

TEST_CASE("result does not depend on the rho seed") {
  SplitMix64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t n = rng.next() | 1;
    const Factorization a = factorize(n);
    CHECK(factorize(n, {1}) == a);
    CHECK(factorize(n, {0xDEADBEEF}) == a);
    CHECK(factorize(n) == a);
  }
}
