#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ztile/tiling.hpp"

namespace ztile {

/// All complements B' with tile (+) B' = Z_M, lexicographically sorted
/// and duplicate-free. Empty when |tile| does not divide M or the tile's
/// reductions mod M collide.
std::vector<CyclicSet> enumerate_complements(const TileSet& tile,
                                             std::int64_t modulus);

struct NonperiodicWitness {
  std::int64_t modulus = 0;
  CyclicSet complement;
};

/// Largest candidate modulus M <= cap at which some complement of the
/// tile has least period exactly M, with the lexicographically least
/// such complement. Only certificate candidates are searched.
std::optional<NonperiodicWitness> max_nonperiodic_modulus(const TileSet& tile,
                                                          std::int64_t cap);

/// Brute-force variant scanning every modulus <= cap; the oracle the
/// pruned search is validated against.
std::optional<NonperiodicWitness> max_nonperiodic_modulus_unpruned(
    const TileSet& tile, std::int64_t cap);

struct SearchOptions {
  std::optional<std::int64_t> cap;  // default 2^D per diameter
  bool unpruned = false;
  int jobs = 1;
  std::int64_t guard = 8;  // refuse diameters beyond this
};

/// The largest least period over all tiles of diameter <= D, with a
/// deterministic witness (max modulus, then lexicographically least tile
/// and complement). exact is set when the cap covers the full 2^D range,
/// making the value unconditional rather than a lower bound.
struct SearchWitness {
  std::int64_t diameter = 0;
  std::int64_t value = 0;
  TileSet tile;
  CyclicSet complement;
  bool exact = false;
};

SearchWitness compute_T(std::int64_t diameter, const SearchOptions& opts = {});

/// One row per diameter 1..max_diameter.
std::vector<SearchWitness> emit_table(std::int64_t max_diameter,
                                      const SearchOptions& opts = {});

}  // namespace ztile
