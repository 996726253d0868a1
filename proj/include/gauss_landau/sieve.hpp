#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

namespace gauss_landau {

// Immutable result of one sieve run: every prime <= limit, ascending.
struct SieveSnapshot {
  std::uint64_t limit = 1;
  std::vector<std::uint64_t> primes;

  // Primes p <= bound (bound may be below limit).
  std::span<const std::uint64_t> up_to(std::uint64_t bound) const;
};

// Process-wide prime cache. Readers get a shared snapshot and never see a
// partially built sieve; extension builds a fresh snapshot off-lock and
// publishes it under an exclusive lock.
class PrimeSieve {
 public:
  static PrimeSieve& global();

  // Snapshot covering at least `limit`.
  std::shared_ptr<const SieveSnapshot> ensure(std::uint64_t limit);
  std::shared_ptr<const SieveSnapshot> current() const;

  // Replaces the current snapshot if `snapshot` covers a larger limit.
  void install(std::shared_ptr<const SieveSnapshot> snapshot);

 private:
  PrimeSieve();

  mutable std::shared_mutex mutex_;
  std::shared_ptr<const SieveSnapshot> snapshot_;
};

std::shared_ptr<const SieveSnapshot> sieve_of_eratosthenes(std::uint64_t limit);

// On-disk cache: "GLSIEVE1", u64 limit, then u64 primes, all little-endian.
// Returns nullopt for a missing, truncated or inconsistent file.
std::optional<SieveSnapshot> read_sieve_cache(const std::filesystem::path& path);
bool write_sieve_cache(const std::filesystem::path& path, const SieveSnapshot& snapshot);

}  // namespace gauss_landau
