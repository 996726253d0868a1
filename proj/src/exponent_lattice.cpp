#include "gauss_landau/exponent_lattice.hpp"

#include <algorithm>

#include "gauss_landau/errors.hpp"

namespace gauss_landau {
namespace {

void require_same_support(const ExponentVector& a, const ExponentVector& b) {
  if (!(a.support() == b.support())) {
    throw DomainError("exponent vectors are over different prime supports");
  }
}

template <typename Pick>
ExponentVector fold_pointwise(std::span<const ExponentVector> vectors, const char* name, Pick pick) {
  if (vectors.empty()) throw DomainError(std::string(name) + " of an empty list is undefined");
  std::vector<std::uint32_t> out(vectors.front().exponents().begin(),
                                 vectors.front().exponents().end());
  for (const ExponentVector& v : vectors.subspan(1)) {
    require_same_support(vectors.front(), v);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = pick(out[j], v[j]);
  }
  return ExponentVector(vectors.front().support(), std::move(out));
}

}  // namespace

PrimeSupport::PrimeSupport() : primes_(std::make_shared<const std::vector<std::uint64_t>>()) {}

PrimeSupport::PrimeSupport(std::vector<std::uint64_t> primes) {
  for (std::size_t j = 0; j < primes.size(); ++j) {
    if (!is_prime(primes[j])) {
      throw DomainError("support entry " + std::to_string(primes[j]) + " is not prime");
    }
    if (j > 0 && primes[j - 1] >= primes[j]) {
      throw DomainError("support primes must be strictly ascending");
    }
  }
  primes_ = std::make_shared<const std::vector<std::uint64_t>>(std::move(primes));
}

bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
  return a.primes_ == b.primes_ || *a.primes_ == *b.primes_;
}

ExponentVector::ExponentVector(PrimeSupport support, std::vector<std::uint32_t> exponents)
    : support_(std::move(support)), exponents_(std::move(exponents)) {
  if (exponents_.size() != support_.size()) {
    throw DomainError("exponent vector length " + std::to_string(exponents_.size()) +
                      " does not match support size " + std::to_string(support_.size()));
  }
}

ExponentVector ExponentVector::zero(PrimeSupport support) {
  const std::size_t k = support.size();
  return ExponentVector(std::move(support), std::vector<std::uint32_t>(k, 0));
}

AlignedFactorizations align(std::span<const Factorization> factorizations) {
  if (factorizations.empty()) throw DomainError("support of empty set undefined");

  std::vector<std::uint64_t> primes;
  for (const Factorization& f : factorizations) {
    for (const PrimePower& e : f.entries()) primes.push_back(e.prime);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  PrimeSupport support(std::move(primes));

  AlignedFactorizations out{support, {}};
  out.vectors.reserve(factorizations.size());
  const auto support_primes = support.primes();
  for (const Factorization& f : factorizations) {
    std::vector<std::uint32_t> exponents(support_primes.size(), 0);
    // Both lists ascend, so one merge pass fills the vector.
    std::size_t j = 0;
    for (const PrimePower& e : f.entries()) {
      while (support_primes[j] != e.prime) ++j;
      exponents[j] = e.exponent;
    }
    out.vectors.emplace_back(support, std::move(exponents));
  }
  return out;
}

ExponentVector meet(std::span<const ExponentVector> vectors) {
  return fold_pointwise(vectors, "meet", [](std::uint32_t a, std::uint32_t b) { return std::min(a, b); });
}

ExponentVector join(std::span<const ExponentVector> vectors) {
  return fold_pointwise(vectors, "join", [](std::uint32_t a, std::uint32_t b) { return std::max(a, b); });
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  require_same_support(a, b);
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a[j] + b[j];
  return ExponentVector(a.support(), std::move(out));
}

bool dominates(const ExponentVector& a, const ExponentVector& b) {
  require_same_support(a, b);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < b[j]) return false;
  }
  return true;
}

BigInt reconstruct(const ExponentVector& v) {
  BigInt result = 1;
  const auto primes = v.support().primes();
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) result *= boost::multiprecision::pow(BigInt(primes[j]), v[j]);
  }
  return result;
}

Factorization to_factorization(const ExponentVector& v) {
  std::vector<PrimePower> entries;
  const auto primes = v.support().primes();
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) entries.push_back({primes[j], v[j]});
  }
  return Factorization::from_entries(std::move(entries));
}

}  // namespace gauss_landau
