#include "gauss_landau/gcd_lcm.hpp"

#include <algorithm>
#include <array>

#include "gauss_landau/errors.hpp"
#include "gauss_landau/factorization.hpp"

namespace gauss_landau {
namespace {

constexpr std::uint64_t kDistributiveInputMax = 0xFFFF'FFFFULL;

void require_positive(std::uint64_t v, const char* what) {
  if (v == 0) throw DomainError(std::string(what) + " must be a positive integer");
}

}  // namespace

GcdLcmResult gcd_lcm_set(std::span<const std::uint64_t> values) {
  if (values.empty()) throw DomainError("gcd/lcm of an empty list is undefined");
  std::vector<Factorization> factorizations;
  factorizations.reserve(values.size());
  for (std::uint64_t v : values) {
    if (v == 0) throw DomainError("gcd/lcm inputs must be nonzero; zero is excluded from the set");
    factorizations.push_back(factorize(v));
  }
  AlignedFactorizations aligned = align(factorizations);

  GcdLcmResult result;
  result.support = aligned.support;
  result.min_exponents = meet(aligned.vectors);
  result.max_exponents = join(aligned.vectors);
  // The meet divides every input, so the gcd fits in 64 bits.
  result.gcd = reconstruct(result.min_exponents).convert_to<std::uint64_t>();
  result.lcm = reconstruct(result.max_exponents);
  return result;
}

GcdLcmResult gcd_lcm_set(std::span<const BigInt> values) {
  std::vector<std::uint64_t> magnitudes;
  magnitudes.reserve(values.size());
  for (const BigInt& v : values) {
    if (v == 0) throw DomainError("gcd/lcm inputs must be nonzero; zero is excluded from the set");
    magnitudes.push_back(checked_magnitude(v, "gcd/lcm input"));
  }
  return gcd_lcm_set(std::span<const std::uint64_t>(magnitudes));
}

BigInt gcd_euclid(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
  BigInt x = abs(a);
  BigInt y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::uint64_t gcd_euclid(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

ReducedRatio reduce_ratio(const BigInt& a, const BigInt& b) {
  const std::array<std::uint64_t, 2> terms = {checked_magnitude(a, "ratio term"),
                                              checked_magnitude(b, "ratio term")};
  const std::uint64_t g = gcd_lcm_set(std::span<const std::uint64_t>(terms)).gcd;
  return {terms[0] / g, terms[1] / g};
}

ProductIdentityReport check_product_identity(std::uint64_t a, std::uint64_t b) {
  require_positive(a, "a");
  require_positive(b, "b");
  const std::array<std::uint64_t, 2> pair = {a, b};
  GcdLcmResult r = gcd_lcm_set(std::span<const std::uint64_t>(pair));

  ProductIdentityReport report;
  report.product = BigInt(a) * b;
  report.gcd = r.gcd;
  report.lcm = std::move(r.lcm);
  report.gcd_times_lcm = report.lcm * report.gcd;
  report.holds = report.product == report.gcd_times_lcm;
  return report;
}

DistributiveIdentityReport check_distributive_identity(std::uint64_t a, std::uint64_t b,
                                                       std::uint64_t c) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  // Pairwise lcms must themselves be valid gcd_lcm_set inputs.
  if (a > kDistributiveInputMax || b > kDistributiveInputMax || c > kDistributiveInputMax) {
    throw DomainError("distributive identity check takes inputs up to 2^32 - 1");
  }

  auto pair = [](std::uint64_t x, std::uint64_t y) {
    const std::array<std::uint64_t, 2> v = {x, y};
    return gcd_lcm_set(std::span<const std::uint64_t>(v));
  };
  const GcdLcmResult ab = pair(a, b);
  const GcdLcmResult bc = pair(b, c);
  const GcdLcmResult ac = pair(a, c);

  DistributiveIdentityReport report;
  const std::array<std::uint64_t, 3> lcms = {ab.lcm.convert_to<std::uint64_t>(),
                                             bc.lcm.convert_to<std::uint64_t>(),
                                             ac.lcm.convert_to<std::uint64_t>()};
  const std::array<std::uint64_t, 3> gcds = {ab.gcd, bc.gcd, ac.gcd};
  report.lhs = gcd_lcm_set(std::span<const std::uint64_t>(lcms)).gcd;
  report.rhs = gcd_lcm_set(std::span<const std::uint64_t>(gcds)).lcm;

  const std::array<Factorization, 3> fs = {factorize(a), factorize(b), factorize(c)};
  const AlignedFactorizations aligned = align(fs);
  const ExponentVector& va = aligned.vectors[0];
  const ExponentVector& vb = aligned.vectors[1];
  const ExponentVector& vc = aligned.vectors[2];
  std::vector<std::uint32_t> lhs_exp(aligned.support.size());
  std::vector<std::uint32_t> rhs_exp(aligned.support.size());
  for (std::size_t j = 0; j < aligned.support.size(); ++j) {
    lhs_exp[j] = std::min({std::max(va[j], vb[j]), std::max(vb[j], vc[j]), std::max(va[j], vc[j])});
    rhs_exp[j] = std::max({std::min(va[j], vb[j]), std::min(vb[j], vc[j]), std::min(va[j], vc[j])});
    report.per_prime.push_back({aligned.support.primes()[j], lhs_exp[j], rhs_exp[j]});
  }
  report.lhs_exponent = reconstruct(ExponentVector(aligned.support, std::move(lhs_exp)));
  report.rhs_exponent = reconstruct(ExponentVector(aligned.support, std::move(rhs_exp)));

  const bool rows_agree = std::all_of(report.per_prime.begin(), report.per_prime.end(),
                                      [](const PrimeExponentRow& r) { return r.min_of_max == r.max_of_min; });
  report.holds = rows_agree && report.lhs == report.rhs && report.lhs_exponent == report.rhs_exponent &&
                 report.lhs == report.lhs_exponent;
  return report;
}

}  // namespace gauss_landau
