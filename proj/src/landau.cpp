#include "gauss_landau/landau.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gauss_landau/errors.hpp"
#include "gauss_landau/factorization.hpp"
#include "gauss_landau/gcd_lcm.hpp"

namespace gauss_landau {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i]) throw DomainError("partition parts must be non-increasing");
    n_ += parts_[i];
  }
}

PartitionStream::PartitionStream(std::uint32_t n) : n_(n) {}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ > 0) parts_.push_back(n_);
    return true;
  }
  // Rightmost part above 1; everything after it is a run of 1s.
  std::size_t i = parts_.size();
  while (i > 0 && parts_[i - 1] == 1) --i;
  if (i == 0) {
    done_ = true;
    return false;
  }
  --i;
  const std::uint32_t cap = parts_[i] - 1;
  std::uint32_t rest = static_cast<std::uint32_t>(parts_.size() - i - 1) + 1;
  parts_.resize(i);
  parts_.push_back(cap);
  while (rest > 0) {
    const std::uint32_t part = std::min(cap, rest);
    parts_.push_back(part);
    rest -= part;
  }
  return true;
}

std::vector<Partition> partitions(std::uint32_t n) {
  std::vector<Partition> out;
  PartitionStream stream(n);
  while (stream.next()) out.emplace_back(std::vector<std::uint32_t>(stream.parts().begin(), stream.parts().end()));
  return out;
}

std::optional<double> asymptotic_ratio(std::uint32_t n, const BigInt& value) {
  if (n < 2) return std::nullopt;
  const double x = n;
  return natural_log(value) / std::sqrt(x * std::log(x));
}

LandauRecord landau_bruteforce(std::uint32_t n) {
  if (n < 1 || n > kBruteForceLimit) {
    throw DomainError("brute-force Landau search needs 1 <= n <= " + std::to_string(kBruteForceLimit));
  }
  LandauRecord record;
  record.n = n;
  record.value = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> parts;
  PartitionStream stream(n);
  while (stream.next()) {
    ++count;
    parts.assign(stream.parts().begin(), stream.parts().end());
    BigInt lcm = gcd_lcm_set(std::span<const std::uint64_t>(parts)).lcm;
    if (lcm > record.value) {
      record.value = std::move(lcm);
      record.witness = Partition(std::vector<std::uint32_t>(stream.parts().begin(), stream.parts().end()));
    }
  }
  record.partitions_enumerated = count;
  record.ratio = asymptotic_ratio(n, record.value);
  return record;
}

LandauTable::LandauTable(std::uint32_t n_max) : n_max_(n_max) {
  if (n_max < 1 || n_max > kDpLimit) {
    throw DomainError("Landau DP needs 1 <= n <= " + std::to_string(kDpLimit));
  }
  primes_ = primes_up_to(n_max);
  const std::size_t width = static_cast<std::size_t>(n_max) + 1;
  best_.assign(width, BigInt(1));
  choice_.assign(primes_.size() * width, 0);

  std::vector<std::uint64_t> powers;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const std::uint64_t p = primes_[i];
    powers.clear();
    for (std::uint64_t q = p; q <= n_max; q *= p) powers.push_back(q);
    std::uint8_t* choice_row = choice_.data() + i * width;
    // Descending budgets read cells this prime has not touched yet.
    for (std::uint64_t b = n_max; b >= p; --b) {
      std::size_t best_e = 0;
      BigInt best_here;
      for (std::size_t e = 0; e < powers.size() && powers[e] <= b; ++e) {
        BigInt candidate = best_[b - powers[e]] * powers[e];
        if (candidate > (best_e == 0 ? best_[b] : best_here)) {
          best_here = std::move(candidate);
          best_e = e + 1;
        }
      }
      if (best_e != 0) {
        best_[b] = std::move(best_here);
        choice_row[b] = static_cast<std::uint8_t>(best_e);
      }
    }
  }
}

const BigInt& LandauTable::value(std::uint32_t n) const {
  if (n < 1 || n > n_max_) throw DomainError("n outside the computed Landau table");
  return best_[n];
}

Partition LandauTable::witness(std::uint32_t n) const {
  value(n);
  const std::size_t width = static_cast<std::size_t>(n_max_) + 1;
  std::vector<std::uint32_t> parts;
  std::uint64_t budget = n;
  for (std::size_t i = primes_.size(); i-- > 0;) {
    const std::uint8_t e = choice_[i * width + budget];
    if (e == 0) continue;
    std::uint64_t q = 1;
    for (std::uint8_t k = 0; k < e; ++k) q *= primes_[i];
    parts.push_back(static_cast<std::uint32_t>(q));
    budget -= q;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts.insert(parts.end(), budget, 1);
  return Partition(std::move(parts));
}

LandauRecord LandauTable::record(std::uint32_t n) const {
  LandauRecord r;
  r.n = n;
  r.value = value(n);
  r.witness = witness(n);
  r.ratio = asymptotic_ratio(n, r.value);
  return r;
}

LandauRecord landau_dp(std::uint32_t n) { return LandauTable(n).record(n); }

std::vector<LandauRecord> asymptotic_table(std::uint32_t n_max, std::uint32_t step) {
  if (n_max < 2 || n_max > kDpLimit) {
    throw DomainError("asymptotic table needs 2 <= max <= " + std::to_string(kDpLimit));
  }
  if (step < 1) throw DomainError("asymptotic table step must be >= 1");
  const LandauTable table(n_max);
  std::vector<LandauRecord> rows;
  for (std::uint32_t n = 2;; n += step) {
    rows.push_back(table.record(n));
    if (step > n_max - n) break;
  }
  return rows;
}

}  // namespace gauss_landau
