#include "gauss_landau/sieve.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <mutex>

#include "gauss_landau/factorization.hpp"

namespace gauss_landau {
namespace {

constexpr std::array<char, 8> kMagic = {'G', 'L', 'S', 'I', 'E', 'V', 'E', '1'};

// Cached files above this limit are treated as corrupt.
constexpr std::uint64_t kMaxCachedLimit = std::uint64_t{1} << 32;

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

bool get_u64(std::istream& in, std::uint64_t& v) {
  std::array<unsigned char, 8> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) return false;
  v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return true;
}

}  // namespace

std::span<const std::uint64_t> SieveSnapshot::up_to(std::uint64_t bound) const {
  auto end = std::upper_bound(primes.begin(), primes.end(), bound);
  return {primes.data(), static_cast<std::size_t>(end - primes.begin())};
}

std::shared_ptr<const SieveSnapshot> sieve_of_eratosthenes(std::uint64_t limit) {
  auto snapshot = std::make_shared<SieveSnapshot>();
  snapshot->limit = limit;
  if (limit < 2) return snapshot;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) snapshot->primes.push_back(i);
  }
  return snapshot;
}

PrimeSieve::PrimeSieve() : snapshot_(sieve_of_eratosthenes(1)) {}

PrimeSieve& PrimeSieve::global() {
  static PrimeSieve sieve;
  return sieve;
}

std::shared_ptr<const SieveSnapshot> PrimeSieve::current() const {
  std::shared_lock lock(mutex_);
  return snapshot_;
}

std::shared_ptr<const SieveSnapshot> PrimeSieve::ensure(std::uint64_t limit) {
  {
    std::shared_lock lock(mutex_);
    if (snapshot_->limit >= limit) return snapshot_;
  }
  std::unique_lock lock(mutex_);
  if (snapshot_->limit >= limit) return snapshot_;
  // Grow geometrically so repeated small extensions stay cheap.
  const std::uint64_t target = std::max(limit, snapshot_->limit * 2);
  snapshot_ = sieve_of_eratosthenes(target);
  return snapshot_;
}

void PrimeSieve::install(std::shared_ptr<const SieveSnapshot> snapshot) {
  if (!snapshot) return;
  std::unique_lock lock(mutex_);
  if (snapshot->limit > snapshot_->limit) snapshot_ = std::move(snapshot);
}

std::optional<SieveSnapshot> read_sieve_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) return std::nullopt;
  SieveSnapshot snapshot;
  if (!get_u64(in, snapshot.limit) || snapshot.limit > kMaxCachedLimit) return std::nullopt;

  std::uint64_t prime = 0;
  while (get_u64(in, prime)) {
    if (prime > snapshot.limit) return std::nullopt;
    if (!snapshot.primes.empty() && prime <= snapshot.primes.back()) return std::nullopt;
    if (!is_prime(prime)) return std::nullopt;
    snapshot.primes.push_back(prime);
  }
  // A trailing partial word means truncation.
  if (in.gcount() != 0) return std::nullopt;
  if (snapshot.limit >= 2 && (snapshot.primes.empty() || snapshot.primes.front() != 2)) {
    return std::nullopt;
  }
  return snapshot;
}

bool write_sieve_cache(const std::filesystem::path& path, const SieveSnapshot& snapshot) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(kMagic.data(), kMagic.size());
  put_u64(out, snapshot.limit);
  for (std::uint64_t p : snapshot.primes) put_u64(out, p);
  return static_cast<bool>(out);
}

}  // namespace gauss_landau
