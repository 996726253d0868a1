#include "gauss_landau/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gauss_landau/errors.hpp"
#include "gauss_landau/gcd_lcm.hpp"

namespace gauss_landau {
namespace {

std::vector<std::uint32_t> compose(std::span<const std::uint32_t> outer,
                                   std::span<const std::uint32_t> inner) {
  std::vector<std::uint32_t> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
  return out;
}

}  // namespace

CycleDecomposition CycleDecomposition::from_lengths(std::vector<std::uint32_t> lengths) {
  if (lengths.empty()) throw DomainError("a cycle decomposition needs at least one cycle");
  CycleDecomposition d;
  for (std::uint32_t len : lengths) {
    if (len == 0) throw DomainError("cycle lengths must be positive");
    d.n_ += len;
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  d.lengths_ = std::move(lengths);
  return d;
}

void check_bijection(std::span<const std::uint32_t> perm) {
  if (perm.empty()) throw DomainError("permutation must have degree >= 1");
  std::vector<bool> seen(perm.size() + 1, false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const std::uint32_t image = perm[i];
    const std::string where = "permutation is not a bijection at index " + std::to_string(i + 1);
    if (image < 1 || image > perm.size()) {
      throw DomainError(where + ": image " + std::to_string(image) + " outside 1.." +
                        std::to_string(perm.size()));
    }
    if (seen[image]) throw DomainError(where + ": image " + std::to_string(image) + " repeated");
    seen[image] = true;
  }
}

CycleDecomposition cycle_decompose(std::span<const std::uint32_t> perm) {
  check_bijection(perm);
  std::vector<bool> visited(perm.size(), false);
  std::vector<std::uint32_t> lengths;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (visited[start]) continue;
    std::uint32_t len = 0;
    for (std::size_t i = start; !visited[i]; i = perm[i] - 1) {
      visited[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleDecomposition::from_lengths(std::move(lengths));
}

BigInt order(const CycleDecomposition& d) {
  const std::vector<std::uint64_t> lengths(d.cycle_lengths().begin(), d.cycle_lengths().end());
  return gcd_lcm_set(std::span<const std::uint64_t>(lengths)).lcm;
}

bool verify_order(std::span<const std::uint32_t> perm, const BigInt& m) {
  check_bijection(perm);
  if (m < 1) throw DomainError("power must be >= 1");
  std::vector<std::uint32_t> identity(perm.size());
  std::iota(identity.begin(), identity.end(), 1u);

  // Square-and-multiply over the bits of m; composition is the only step.
  std::vector<std::uint32_t> power = identity;
  std::vector<std::uint32_t> base(perm.begin(), perm.end());
  BigInt e = m;
  while (e > 0) {
    if ((e & 1) != 0) power = compose(base, power);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return power == identity;
}

}  // namespace gauss_landau
