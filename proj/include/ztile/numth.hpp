#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ztile {

/// All primes up to a fixed limit, ascending.
struct PrimeTable {
  std::int64_t limit = 0;
  std::vector<std::int64_t> primes;
};

/// Sieve of Eratosthenes. limit 0 or 1 gives an empty table.
PrimeTable primes_up_to(std::int64_t limit);

/// Euler totient: count of k in [1, n] coprime to n. Rejects n < 1.
std::int64_t euler_phi(std::int64_t n);

/// Moebius function, value in {-1, 0, 1}. Rejects n < 1.
int moebius(std::int64_t n);

/// All divisors of n, ascending. Rejects n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// phi(k) for all k in [0, limit]; entry 0 is 0.
std::vector<std::int64_t> euler_phi_table(std::int64_t limit);

// Overflow-checked unsigned arithmetic. nullopt means the exact value
// exceeds 64 bits; results are never silently wrapped.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow2(std::uint64_t exponent);

}  // namespace ztile
