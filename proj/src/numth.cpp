#include "ztile/numth.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ztile {

PrimeTable primes_up_to(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("primes_up_to: negative limit");
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    table.primes.push_back(p);
    for (std::int64_t q = p * p; q <= limit; q += p)
      composite[static_cast<std::size_t>(q)] = true;
  }
  return table;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    result -= result / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
  int factors = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;  // square factor
    ++factors;
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> euler_phi_table(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("euler_phi_table: negative limit");
  std::vector<std::int64_t> phi(static_cast<std::size_t>(limit) + 1);
  for (std::int64_t i = 0; i <= limit; ++i) phi[static_cast<std::size_t>(i)] = i;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;  // p is prime
    for (std::int64_t m = p; m <= limit; m += p)
      phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
  }
  return phi;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::nullopt;
  return a * b;
}

std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

std::optional<std::uint64_t> checked_pow2(std::uint64_t exponent) {
  if (exponent > 63) return std::nullopt;
  return std::uint64_t{1} << exponent;
}

}  // namespace ztile
