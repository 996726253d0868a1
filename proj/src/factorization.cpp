#include "gauss_landau/factorization.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "gauss_landau/errors.hpp"
#include "gauss_landau/rng.hpp"
#include "gauss_landau/sieve.hpp"

namespace gauss_landau {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n odd, n > 3; true if n is a strong probable prime to base a.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// a, b < m; the sum may wrap past 2^64 when m > 2^63.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return (s < a || s >= m) ? s - m : s;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// Brent's variant of Pollard rho. n odd composite; returns a nontrivial
// divisor.
std::uint64_t pollard_rho(std::uint64_t n, SplitMix64& rng) {
  constexpr std::uint64_t kBatch = 128;
  for (;;) {
    const std::uint64_t c = rng.uniform(1, n - 1);
    std::uint64_t y = rng.uniform(0, n - 1);
    auto step = [&](std::uint64_t v) { return add_mod(mul_mod(v, v, n), c, n); };

    std::uint64_t g = 1, q = 1, x = y, ys = y;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t batch = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < batch; ++i) {
          y = step(y);
          q = mul_mod(q, abs_diff(x, y), n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        ys = step(ys);
        g = std::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace

Factorization Factorization::from_entries(std::vector<PrimePower> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const PrimePower& e = entries[i];
    if (!is_prime(e.prime)) {
      throw DomainError("factorization entry " + std::to_string(e.prime) + " is not prime");
    }
    if (e.exponent == 0) {
      throw DomainError("factorization exponent of " + std::to_string(e.prime) + " must be >= 1");
    }
    if (i > 0 && entries[i - 1].prime >= e.prime) {
      throw DomainError("factorization primes must be strictly ascending");
    }
  }
  return Factorization(Trusted{}, std::move(entries));
}

std::uint32_t Factorization::exponent_of(std::uint64_t prime) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), prime,
                             [](const PrimePower& e, std::uint64_t p) { return e.prime < p; });
  return it != entries_.end() && it->prime == prime ? it->exponent : 0;
}

bool is_prime(std::uint64_t n) {
  constexpr std::array<std::uint64_t, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  // Deterministic for every n < 2^64.
  constexpr std::array<std::uint64_t, 7> kBases = {2, 325, 9375, 28178, 450775, 9780504,
                                                   1795265022};
  return std::all_of(kBases.begin(), kBases.end(),
                     [n](std::uint64_t a) { return strong_probable_prime(n, a); });
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit < 2) return {};
  auto snapshot = PrimeSieve::global().ensure(limit);
  auto primes = snapshot->up_to(limit);
  return {primes.begin(), primes.end()};
}

Factorization factorize(std::uint64_t n, const FactorizeOptions& options) {
  if (n == 0) throw DomainError("factorization defined for positive integers");

  std::vector<PrimePower> entries;
  std::uint64_t rest = n;
  // Large cofactors are tested for primality up front and after every
  // division so a big prime does not drag trial division to the cutoff.
  auto rest_is_large_prime = [&] { return rest >= kTrialDivisionCutoff && is_prime(rest); };

  if (!rest_is_large_prime()) {
    auto snapshot = PrimeSieve::global().ensure(kTrialDivisionCutoff);
    for (std::uint64_t p : snapshot->up_to(kTrialDivisionCutoff)) {
      if (p * p > rest) break;
      if (rest % p != 0) continue;
      std::uint32_t e = 0;
      do {
        rest /= p;
        ++e;
      } while (rest % p == 0);
      entries.push_back({p, e});
      if (rest_is_large_prime()) break;
    }
  }

  if (rest > 1) {
    // Every prime factor of rest exceeds the cutoff, or rest is prime.
    std::vector<std::uint64_t> large;
    std::vector<std::uint64_t> pending = {rest};
    SplitMix64 rng(options.rho_seed);
    while (!pending.empty()) {
      const std::uint64_t m = pending.back();
      pending.pop_back();
      if (is_prime(m)) {
        large.push_back(m);
        continue;
      }
      const std::uint64_t d = pollard_rho(m, rng);
      pending.push_back(d);
      pending.push_back(m / d);
    }
    std::sort(large.begin(), large.end());
    for (std::uint64_t p : large) {
      if (!entries.empty() && entries.back().prime == p) {
        ++entries.back().exponent;
      } else {
        entries.push_back({p, 1});
      }
    }
  }
  return Factorization(Factorization::Trusted{}, std::move(entries));
}

Factorization factorize(const BigInt& n, const FactorizeOptions& options) {
  if (n <= 0) throw DomainError("factorization defined for positive integers");
  if (n > kMaxInput) throw DomainError("factorization input exceeds 2^64 - 1");
  return factorize(n.convert_to<std::uint64_t>(), options);
}

BigInt reconstruct(const Factorization& f) {
  BigInt result = 1;
  for (const PrimePower& e : f.entries()) result *= boost::multiprecision::pow(BigInt(e.prime), e.exponent);
  return result;
}

}  // namespace gauss_landau
