#include "ztile/certify.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "ztile/numth.hpp"
#include "ztile/poly.hpp"

namespace ztile {

Certificate certificate(const TileSet& tile) {
  Certificate cert{tile, cyclotomic_divisor_set(tile), 0, 1, 1,
                   checked_pow2(static_cast<std::uint64_t>(tile.diameter()))};
  for (std::int64_t s : cert.s_list) {
    cert.phi_sum += euler_phi(s);
    if (cert.t_prod) cert.t_prod = checked_mul(*cert.t_prod, static_cast<std::uint64_t>(s));
    if (cert.t_lcm) cert.t_lcm = checked_lcm(*cert.t_lcm, static_cast<std::uint64_t>(s));
  }
  return cert;
}

std::int64_t forced_period(const TileSet& tile, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("forced_period: modulus must be >= 1");
  IntPoly mask = mask_poly(tile);
  std::int64_t t0 = 1;
  for (std::int64_t d : divisors(modulus)) {
    if (d == 1) continue;
    if (divides_cyclotomic(d, mask)) t0 = std::lcm(t0, d);  // stays a divisor of M
  }
  return t0;
}

std::vector<std::int64_t> nonperiodic_modulus_candidates(const TileSet& tile,
                                                         std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("candidates: cap must be >= 1");
  // A non-periodic complement at modulus M forces
  //   M = lcm{ d | M : Phi_d divides the mask },
  // so M is an lcm of a subset of the divisor set. Accumulate distinct
  // subset lcms (they all divide lcm of the whole set, so few values).
  std::set<std::uint64_t> lcms{1};
  for (std::int64_t s : cyclotomic_divisor_set(tile)) {
    std::set<std::uint64_t> next = lcms;
    for (std::uint64_t v : lcms) {
      auto l = checked_lcm(v, static_cast<std::uint64_t>(s));
      if (l && *l <= static_cast<std::uint64_t>(cap)) next.insert(*l);
    }
    lcms.swap(next);
  }
  std::vector<std::int64_t> out;
  std::uint64_t card = tile.size();
  for (std::uint64_t m : lcms) {
    if (m > static_cast<std::uint64_t>(cap)) continue;
    if (m % card != 0) continue;  // any tiling needs |A| * |B'| = M
    if (m == 1 && tile.size() != 1) continue;
    out.push_back(static_cast<std::int64_t>(m));
  }
  return out;
}

BoundsReport report_bounds(std::int64_t diameter, std::int64_t max_exhaustive_diameter) {
  if (diameter < 1) throw std::invalid_argument("report_bounds: diameter must be >= 1");
  BoundsReport report;
  report.diameter = diameter;
  report.lower = 2 * diameter;
  report.newman_cap = checked_pow2(static_cast<std::uint64_t>(diameter));
  report.asymptotic_note =
      "least periods are bounded by exp(C*sqrt(D)*log(D)*sqrt(log(log(D)))) "
      "with ineffective constants; only the finite bounds above are computed";
  if (diameter > max_exhaustive_diameter || diameter > 62) {
    report.exhaustive = false;  // partial report: tile scan skipped
    return report;
  }
  report.exhaustive = true;
  std::uint64_t best = 0;
  bool best_overflow = false;
  std::uint64_t tiles = std::uint64_t{1} << diameter;
  for (std::uint64_t bits = 0; bits < tiles; ++bits) {
    std::vector<std::int64_t> elems{0};
    for (std::int64_t i = 0; i < diameter; ++i)
      if (bits & (std::uint64_t{1} << i)) elems.push_back(i + 1);
    TileSet tile(std::move(elems));
    Certificate cert = certificate(tile);
    if (!cert.t_lcm) {
      if (!best_overflow) {
        best_overflow = true;
        report.max_tile = tile;
      }
    } else if (!best_overflow && *cert.t_lcm > best) {
      best = *cert.t_lcm;
      report.max_tile = tile;
    }
  }
  if (best_overflow)
    report.max_t_lcm = std::nullopt;
  else
    report.max_t_lcm = best;
  return report;
}

}  // namespace ztile
