#include "ztile/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ztile/numth.hpp"

namespace ztile {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

void require_valid_primes(std::int64_t p, std::int64_t q) {
  if (p <= 5 || q <= 5 || p == q || !is_prime(p) || !is_prime(q))
    throw std::invalid_argument("construct: p and q must be distinct primes > 5");
}

}  // namespace

std::optional<PrimePair> choose_primes(std::int64_t diameter) {
  if (diameter < 1) throw std::invalid_argument("choose_primes: diameter must be >= 1");
  // The projected tile has diameter exactly 24p + 20q, so the budget
  // bounds both primes directly.
  if (diameter < 24 * 7 + 20 * 11) return std::nullopt;
  PrimeTable table = primes_up_to(diameter / 20 + 1);
  std::optional<PrimePair> best;
  std::int64_t best_product = 0;
  for (std::int64_t p : table.primes) {
    if (p <= 5) continue;
    if (24 * p + 20 * 7 > diameter) break;
    for (std::int64_t q : table.primes) {
      if (q <= 5 || q == p) continue;
      if (24 * p + 20 * q > diameter) break;
      std::int64_t product = p * q;
      if (product > best_product ||
          (product == best_product && best && p < best->p)) {
        best = PrimePair{p, q};
        best_product = product;
      }
    }
  }
  return best;
}

std::vector<GroupElement> build_rectangle(std::int64_t p, std::int64_t q) {
  require_valid_primes(p, q);
  std::vector<GroupElement> rect;
  rect.reserve(15);
  for (std::int64_t i = 0; i < 3; ++i)
    for (std::int64_t j = 0; j < 5; ++j) rect.push_back({i, j, 0});
  return rect;
}

std::vector<GroupElement> build_complement(std::int64_t p, std::int64_t q) {
  require_valid_primes(p, q);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(2 * p * q));
  // Lower level: lattice columns, with the whole b = 5 column shifted
  // one step in the x direction.
  for (std::int64_t bj = 0; bj < q; ++bj) {
    std::int64_t b = 5 * bj;
    std::int64_t shift = (b == 5) ? 1 : 0;
    for (std::int64_t ai = 0; ai < p; ++ai) out.push_back({3 * ai + shift, b, 0});
  }
  // Upper level: lattice rows, with the whole a = 3 row shifted one step
  // in the y direction.
  for (std::int64_t ai = 0; ai < p; ++ai) {
    std::int64_t a = 3 * ai;
    std::int64_t shift = (a == 3) ? 1 : 0;
    for (std::int64_t bj = 0; bj < q; ++bj) out.push_back({a, 5 * bj + shift, 1});
  }
  return out;
}

std::int64_t psi(std::int64_t p, std::int64_t q, const GroupElement& g) {
  require_valid_primes(p, q);
  if (g.i < 0 || g.i >= 3 * p || g.j < 0 || g.j >= 5 * q || g.k < 0 || g.k > 1)
    throw std::invalid_argument("psi: group element out of range");
  std::int64_t m = 30 * p * q;
  return (g.i * (10 * q) + g.j * (6 * p) + g.k * (15 * p * q)) % m;
}

std::optional<Construction> construct_long_period(std::int64_t diameter) {
  auto primes = choose_primes(diameter);
  if (!primes) return std::nullopt;
  std::int64_t p = primes->p, q = primes->q;
  std::int64_t m = 30 * p * q;

  // psi must be a bijection onto Z_M; walk the whole group once.
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (std::int64_t i = 0; i < 3 * p; ++i)
    for (std::int64_t j = 0; j < 5 * q; ++j)
      for (std::int64_t k = 0; k < 2; ++k) {
        std::int64_t v = psi(p, q, {i, j, k});
        if (seen[static_cast<std::size_t>(v)])
          throw std::logic_error("construct: psi is not injective");
        seen[static_cast<std::size_t>(v)] = true;
      }

  std::vector<GroupElement> rectangle = build_rectangle(p, q);
  std::vector<GroupElement> complement3d = build_complement(p, q);

  std::vector<std::int64_t> tile_elems;
  tile_elems.reserve(rectangle.size());
  for (const GroupElement& g : rectangle) tile_elems.push_back(psi(p, q, g));
  std::vector<std::int64_t> comp_elems;
  comp_elems.reserve(complement3d.size());
  for (const GroupElement& g : complement3d) comp_elems.push_back(psi(p, q, g));

  TileSet tile(std::move(tile_elems));
  CyclicSet complement(m, std::move(comp_elems));

  if (tile.size() != 15)
    throw std::logic_error("construct: tile size is not 15");
  if (tile.diameter() != 24 * p + 20 * q || tile.diameter() > diameter)
    throw std::logic_error("construct: tile diameter mismatch");
  if (static_cast<std::int64_t>(complement.size()) != 2 * p * q)
    throw std::logic_error("construct: complement size is not 2pq");
  if (!verify_cyclic_tiling(tile, complement))
    throw std::logic_error("construct: candidate pair does not tile Z_M");
  if (least_period_cyclic(complement) != m)
    throw std::logic_error("construct: complement is periodic mod M");

  return Construction{p,
                      q,
                      m,
                      std::move(rectangle),
                      std::move(complement3d),
                      std::move(tile),
                      std::move(complement)};
}

CyclicTiling construct_fallback(std::int64_t diameter) {
  if (diameter < 1)
    throw std::invalid_argument("construct_fallback: diameter must be >= 1");
  TileSet tile({0, diameter});
  std::vector<std::int64_t> comp(static_cast<std::size_t>(diameter));
  for (std::int64_t i = 0; i < diameter; ++i) comp[static_cast<std::size_t>(i)] = i;
  CyclicTiling tiling(tile, CyclicSet(2 * diameter, std::move(comp)));
  if (least_period_cyclic(tiling.complement()) != 2 * diameter)
    throw std::logic_error("construct_fallback: unexpected period");
  return tiling;
}

BestConstruction construct_best(std::int64_t diameter) {
  CyclicTiling fallback = construct_fallback(diameter);
  std::int64_t fallback_period = 2 * diameter;
  if (auto main = construct_long_period(diameter)) {
    if (main->modulus >= fallback_period) {
      return BestConstruction{CyclicTiling(main->tile, main->complement),
                              main->modulus, true, PrimePair{main->p, main->q}};
    }
  }
  return BestConstruction{std::move(fallback), fallback_period, false, std::nullopt};
}

}  // namespace ztile
