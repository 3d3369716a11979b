#include "ztile/tiling.hpp"

#include <algorithm>
#include <stdexcept>

#include "ztile/numth.hpp"

namespace ztile {

namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

void sort_reject_duplicates(std::vector<std::int64_t>& v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument(std::string(what) + ": duplicate element");
}

}  // namespace

TileSet::TileSet(std::vector<std::int64_t> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw std::invalid_argument("TileSet: empty set");
  sort_reject_duplicates(elems_, "TileSet");
  if (elems_.front() != 0)
    throw std::invalid_argument("TileSet: least element must be 0");
}

TileSet normalize_tile(const std::vector<std::int64_t>& raw) {
  if (raw.empty()) throw std::invalid_argument("normalize_tile: empty set");
  std::int64_t lo = *std::min_element(raw.begin(), raw.end());
  std::vector<std::int64_t> shifted;
  shifted.reserve(raw.size());
  for (std::int64_t v : raw) shifted.push_back(v - lo);
  return TileSet(std::move(shifted));
}

CyclicSet::CyclicSet(std::int64_t modulus, std::vector<std::int64_t> elements)
    : modulus_(modulus), elems_(std::move(elements)) {
  if (modulus_ < 1) throw std::invalid_argument("CyclicSet: modulus must be >= 1");
  for (std::int64_t& v : elems_) v = floor_mod(v, modulus_);
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw std::invalid_argument("CyclicSet: elements collide mod M");
}

std::optional<CoverageWitness> cyclic_tiling_witness(const TileSet& tile,
                                                     const CyclicSet& complement) {
  std::int64_t m = complement.modulus();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m), 0);
  for (std::int64_t a : tile.elements()) {
    std::int64_t ar = floor_mod(a, m);
    for (std::int64_t b : complement.elements())
      ++counts[static_cast<std::size_t>((ar + b) % m)];
  }
  for (std::int64_t g = 0; g < m; ++g) {
    std::uint64_t c = counts[static_cast<std::size_t>(g)];
    if (c != 1) return CoverageWitness{g, static_cast<std::int64_t>(c)};
  }
  return std::nullopt;
}

bool verify_cyclic_tiling(const TileSet& tile, const CyclicSet& complement) {
  return !cyclic_tiling_witness(tile, complement).has_value();
}

namespace {

bool shifts_onto_self(const std::vector<std::int64_t>& elems, std::int64_t t,
                      std::int64_t m) {
  for (std::int64_t v : elems) {
    if (!std::binary_search(elems.begin(), elems.end(), (v + t) % m)) return false;
  }
  return true;  // same cardinality, so containment is equality
}

}  // namespace

std::int64_t least_period_cyclic(const CyclicSet& s) {
  std::int64_t m = s.modulus();
  const auto& elems = s.elements();
  if (elems.empty() || static_cast<std::int64_t>(elems.size()) == m) return 1;
  // The shifts fixing S form a subgroup of Z_M, so the least period is a
  // divisor of M and scanning divisors ascending finds it.
  for (std::int64_t t : divisors(m)) {
    if (shifts_onto_self(elems, t, m)) return t;
  }
  return m;  // unreachable: t = M always fixes S
}

bool is_periodic_mod(const CyclicSet& s) {
  // Modulus-1 sets are periodic with period 1 by convention.
  if (s.modulus() == 1) return true;
  return least_period_cyclic(s) < s.modulus();
}

bool verify_z_tiling_window(const TileSet& tile, const CyclicSet& complement,
                            std::int64_t window) {
  std::int64_t m = complement.modulus();
  std::int64_t diam = tile.diameter();
  if (window < m + diam)
    throw std::invalid_argument("verify_z_tiling_window: window must be >= M + diameter");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(window), 0);
  for (std::int64_t b0 : complement.elements()) {
    // b ranges over b0 + M*Z restricted to [-diam, window)
    std::int64_t k_lo = -((diam + b0) / m + 1);
    std::int64_t k_hi = (window - 1 - b0) / m;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      std::int64_t b = b0 + k * m;
      if (b < -diam || b >= window) continue;
      for (std::int64_t a : tile.elements()) {
        std::int64_t x = a + b;
        if (x >= 0 && x < window) ++counts[static_cast<std::size_t>(x)];
      }
    }
  }
  for (std::uint64_t c : counts)
    if (c != 1) return false;
  return true;
}

CyclicTiling::CyclicTiling(TileSet tile, CyclicSet complement)
    : tile_(std::move(tile)), complement_(std::move(complement)) {
  if (auto w = cyclic_tiling_witness(tile_, complement_))
    throw std::invalid_argument("CyclicTiling: not a tiling (residue " +
                                std::to_string(w->point) + " covered " +
                                std::to_string(w->count) + " times)");
}

IntervalTiling make_interval_tiling(std::int64_t n, std::vector<std::int64_t> a,
                                    std::vector<std::int64_t> b) {
  if (n < 1) throw std::invalid_argument("IntervalTiling: n must be >= 1");
  if (a.empty() || b.empty())
    throw std::invalid_argument("IntervalTiling: empty side");
  for (std::int64_t v : a)
    if (v < 0) throw std::invalid_argument("IntervalTiling: negative element");
  for (std::int64_t v : b)
    if (v < 0) throw std::invalid_argument("IntervalTiling: negative element");
  sort_reject_duplicates(a, "IntervalTiling");
  sort_reject_duplicates(b, "IntervalTiling");
  return IntervalTiling{n, std::move(a), std::move(b)};
}

std::optional<CoverageWitness> interval_tiling_witness(const IntervalTiling& t) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(t.n), 0);
  // Sums landing outside [0, n) disqualify the tiling; remember the
  // smallest one in case everything inside is covered exactly once.
  std::int64_t min_outside = -1;
  std::int64_t min_outside_count = 0;
  for (std::int64_t a : t.a) {
    for (std::int64_t b : t.b) {
      std::int64_t s = a + b;
      if (s < t.n) {
        ++counts[static_cast<std::size_t>(s)];
      } else if (min_outside < 0 || s < min_outside) {
        min_outside = s;
        min_outside_count = 1;
      } else if (s == min_outside) {
        ++min_outside_count;
      }
    }
  }
  for (std::int64_t x = 0; x < t.n; ++x) {
    std::uint64_t c = counts[static_cast<std::size_t>(x)];
    if (c != 1) return CoverageWitness{x, static_cast<std::int64_t>(c)};
  }
  if (min_outside >= 0) return CoverageWitness{min_outside, min_outside_count};
  return std::nullopt;
}

bool verify_interval_tiling(const IntervalTiling& t) {
  return !interval_tiling_witness(t).has_value();
}

}  // namespace ztile
